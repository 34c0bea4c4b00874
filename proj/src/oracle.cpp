/* mbfkit: enumeration of monotone Boolean functions
 * Copyright 2026 The mbfkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mbfkit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mbf::oracle
{

namespace
{

using subset = std::vector<int>;

void require( bool ok, const char* what )
{
  if ( !ok )
  {
    throw std::out_of_range( what );
  }
}

// x before y in colex order: they differ, and at the last differing coordinate x has 0.
bool colex_less( const input_vector& x, const input_vector& y )
{
  for ( auto i = x.size(); i-- > 0; )
  {
    if ( x[i] != y[i] )
    {
      return x[i] < y[i];
    }
  }
  return false;
}

bool below( const input_vector& x, const input_vector& y )
{
  for ( std::size_t i = 0; i < x.size(); ++i )
  {
    if ( x[i] > y[i] )
    {
      return false;
    }
  }
  return true;
}

bool contains( const subset& outer, const subset& inner )
{
  return std::includes( outer.begin(), outer.end(), inner.begin(), inner.end() );
}

std::vector<subset> all_subsets( int num_vars )
{
  std::vector<subset> out;
  for ( int bits = 0; bits < ( 1 << num_vars ); ++bits )
  {
    subset s;
    for ( int v = 0; v < num_vars; ++v )
    {
      if ( bits & ( 1 << v ) )
      {
        s.push_back( v + 1 );
      }
    }
    out.push_back( s );
  }
  return out;
}

subset support( const input_vector& x )
{
  subset s;
  for ( std::size_t i = 0; i < x.size(); ++i )
  {
    if ( x[i] )
    {
      s.push_back( static_cast<int>( i ) + 1 );
    }
  }
  return s;
}

std::string table_of( int num_vars, const std::vector<subset>& terms )
{
  std::string out;
  for ( const auto& x : reverse_colex_inputs( num_vars ) )
  {
    const auto s = support( x );
    const bool on = std::any_of( terms.begin(), terms.end(), [&]( const subset& t ) { return contains( s, t ); } );
    out.push_back( on ? '1' : '0' );
  }
  return out;
}

// Smallest renamed copy of the antichain; equal keys mean equal orbits.
std::vector<subset> orbit_key( int num_vars, const std::vector<subset>& terms )
{
  std::vector<int> image( num_vars );
  std::iota( image.begin(), image.end(), 1 );
  std::vector<subset> best;
  bool first = true;
  do
  {
    std::vector<subset> renamed;
    for ( const auto& t : terms )
    {
      subset r;
      for ( int v : t )
      {
        r.push_back( image[v - 1] );
      }
      std::sort( r.begin(), r.end() );
      renamed.push_back( r );
    }
    std::sort( renamed.begin(), renamed.end() );
    if ( first || renamed < best )
    {
      best = renamed;
      first = false;
    }
  } while ( std::next_permutation( image.begin(), image.end() ) );
  return best;
}

} // namespace

std::vector<input_vector> reverse_colex_inputs( int num_vars )
{
  require( num_vars >= 0 && num_vars <= 10, "oracle supports 0 <= n <= 10" );
  std::vector<input_vector> inputs;
  for ( int bits = 0; bits < ( 1 << num_vars ); ++bits )
  {
    input_vector x( num_vars );
    for ( int v = 0; v < num_vars; ++v )
    {
      x[v] = ( bits >> v ) & 1;
    }
    inputs.push_back( x );
  }
  std::sort( inputs.begin(), inputs.end(), []( const auto& a, const auto& b ) { return colex_less( b, a ); } );
  return inputs;
}

std::vector<std::string> brute_monotone_tables( int num_vars )
{
  require( num_vars >= 0 && num_vars <= 4, "brute monotone tables support 0 <= n <= 4" );
  const auto inputs = reverse_colex_inputs( num_vars );
  const std::size_t size = inputs.size();
  std::vector<std::pair<std::size_t, std::size_t>> comparable;
  for ( std::size_t a = 0; a < size; ++a )
  {
    for ( std::size_t b = 0; b < size; ++b )
    {
      if ( a != b && below( inputs[a], inputs[b] ) )
      {
        comparable.emplace_back( a, b );
      }
    }
  }
  std::vector<std::string> out;
  const std::uint64_t count = std::uint64_t( 1 ) << size;
  for ( std::uint64_t t = 0; t < count; ++t )
  {
    std::string table( size, '0' );
    for ( std::size_t j = 0; j < size; ++j )
    {
      if ( ( t >> j ) & 1 )
      {
        table[j] = '1';
      }
    }
    const bool monotone = std::all_of( comparable.begin(), comparable.end(), [&]( const auto& pr ) { return table[pr.first] <= table[pr.second]; } );
    if ( monotone )
    {
      out.push_back( table );
    }
  }
  std::sort( out.begin(), out.end() );
  return out;
}

std::vector<std::vector<subset>> brute_antichains( int num_vars )
{
  require( num_vars >= 0 && num_vars <= 5, "brute antichains support 0 <= n <= 5" );
  const auto candidates = all_subsets( num_vars );
  std::vector<std::vector<subset>> out;
  std::vector<subset> current;
  auto recurse = [&]( auto&& self, std::size_t next ) -> void {
    if ( next == candidates.size() )
    {
      out.push_back( current );
      return;
    }
    self( self, next + 1 );
    const auto& s = candidates[next];
    const bool free = std::none_of( current.begin(), current.end(), [&]( const subset& t ) { return contains( s, t ) || contains( t, s ); } );
    if ( free )
    {
      current.push_back( s );
      self( self, next + 1 );
      current.pop_back();
    }
  };
  recurse( recurse, 0 );
  for ( auto& a : out )
  {
    std::sort( a.begin(), a.end() );
  }
  std::sort( out.begin(), out.end() );
  return out;
}

std::vector<std::vector<std::string>> brute_classes( int num_vars )
{
  require( num_vars >= 0 && num_vars <= 5, "brute classes support 0 <= n <= 5" );
  std::map<std::vector<subset>, std::vector<std::string>> orbits;
  for ( const auto& a : brute_antichains( num_vars ) )
  {
    orbits[orbit_key( num_vars, a )].push_back( table_of( num_vars, a ) );
  }
  std::vector<std::vector<std::string>> out;
  for ( auto& [key, tables] : orbits )
  {
    std::sort( tables.begin(), tables.end() );
    out.push_back( std::move( tables ) );
  }
  std::sort( out.begin(), out.end() );
  return out;
}

std::uint64_t brute_min_shadow( int num_vars, int r, std::uint64_t x )
{
  require( num_vars >= 1 && num_vars <= 6 && r >= 1 && r <= num_vars, "brute shadow supports 1 <= r <= n <= 6" );
  std::vector<subset> level;
  for ( const auto& s : all_subsets( num_vars ) )
  {
    if ( static_cast<int>( s.size() ) == r )
    {
      level.push_back( s );
    }
  }
  require( level.size() <= 20 && x <= level.size(), "brute shadow level too large or x out of range" );
  std::uint64_t best = ~std::uint64_t( 0 );
  for ( std::uint64_t family = 0; family < ( std::uint64_t( 1 ) << level.size() ); ++family )
  {
    if ( static_cast<std::uint64_t>( __builtin_popcountll( family ) ) != x )
    {
      continue;
    }
    std::set<subset> shadow;
    for ( std::size_t i = 0; i < level.size(); ++i )
    {
      if ( ( family >> i ) & 1 )
      {
        for ( std::size_t drop = 0; drop < level[i].size(); ++drop )
        {
          subset lower = level[i];
          lower.erase( lower.begin() + static_cast<std::ptrdiff_t>( drop ) );
          shadow.insert( lower );
        }
      }
    }
    best = std::min<std::uint64_t>( best, shadow.size() );
  }
  return best;
}

std::map<std::vector<int>, std::pair<std::uint64_t, std::uint64_t>> brute_profile_census( int num_vars )
{
  require( num_vars >= 0 && num_vars <= 5, "brute census supports 0 <= n <= 5" );
  std::map<std::vector<int>, std::pair<std::uint64_t, std::uint64_t>> census;
  std::set<std::vector<subset>> seen_orbits;
  for ( const auto& a : brute_antichains( num_vars ) )
  {
    if ( a.size() == 1 && a.front().empty() )
    {
      continue;
    }
    std::vector<int> entries( num_vars, 0 );
    for ( const auto& t : a )
    {
      ++entries[t.size() - 1];
    }
    auto& slot = census[entries];
    ++slot.second;
    if ( seen_orbits.insert( orbit_key( num_vars, a ) ).second )
    {
      ++slot.first;
    }
  }
  return census;
}

} // namespace mbf::oracle
