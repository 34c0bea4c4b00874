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

#include "mbfkit/profile.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>

namespace mbf
{

namespace
{

constexpr int kMaxProfileVars = 9;

void check_length( std::size_t length )
{
  if ( length > static_cast<std::size_t>( kMaxVars ) )
  {
    throw error( error_code::out_of_range, "profile longer than " + std::to_string( kMaxVars ) + " entries" );
  }
}

} // namespace

profile::profile( int num_vars )
{
  if ( num_vars < 0 )
  {
    throw error( error_code::out_of_range, "negative profile length" );
  }
  check_length( static_cast<std::size_t>( num_vars ) );
  num_vars_ = static_cast<std::uint8_t>( num_vars );
}

profile::profile( std::initializer_list<int> entries )
    : profile( std::span<const int>( entries.begin(), entries.size() ) )
{
}

profile::profile( std::span<const int> entries )
{
  check_length( entries.size() );
  num_vars_ = static_cast<std::uint8_t>( entries.size() );
  for ( std::size_t i = 0; i < entries.size(); ++i )
  {
    if ( entries[i] < 0 || entries[i] > 0xffff )
    {
      throw error( error_code::out_of_range, "profile entry out of range" );
    }
    entries_[i] = static_cast<std::uint16_t>( entries[i] );
  }
}

profile profile::parse( std::string_view text )
{
  auto fail = [&]() -> profile {
    throw error( error_code::invalid_argument, "cannot parse profile '" + std::string( text ) + "'" );
  };
  while ( !text.empty() && text.front() == ' ' )
  {
    text.remove_prefix( 1 );
  }
  while ( !text.empty() && text.back() == ' ' )
  {
    text.remove_suffix( 1 );
  }
  if ( text.size() < 2 || text.front() != '(' || text.back() != ')' )
  {
    return fail();
  }
  text = text.substr( 1, text.size() - 2 );
  std::vector<int> entries;
  if ( text.empty() )
  {
    return profile( 0 );
  }
  while ( true )
  {
    while ( !text.empty() && text.front() == ' ' )
    {
      text.remove_prefix( 1 );
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars( text.data(), text.data() + text.size(), value );
    if ( ec != std::errc() )
    {
      return fail();
    }
    entries.push_back( value );
    text.remove_prefix( static_cast<std::size_t>( ptr - text.data() ) );
    while ( !text.empty() && text.front() == ' ' )
    {
      text.remove_prefix( 1 );
    }
    if ( text.empty() )
    {
      break;
    }
    if ( text.front() != ',' )
    {
      return fail();
    }
    text.remove_prefix( 1 );
  }
  return profile( std::span<const int>( entries ) );
}

profile profile::with_entry( int idx, int value ) const
{
  if ( idx < 0 || idx >= num_vars_ || value < 0 || value > 0xffff )
  {
    throw error( error_code::out_of_range, "profile entry out of range" );
  }
  auto copy = *this;
  copy.entries_[static_cast<std::size_t>( idx )] = static_cast<std::uint16_t>( value );
  return copy;
}

int profile::total() const noexcept
{
  int sum = 0;
  for ( int i = 0; i < num_vars_; ++i )
  {
    sum += ( *this )[i];
  }
  return sum;
}

int profile::single_nonzero_index() const noexcept
{
  int found = -1;
  for ( int i = 0; i < num_vars_; ++i )
  {
    if ( ( *this )[i] != 0 )
    {
      if ( found >= 0 )
      {
        return -1;
      }
      found = i;
    }
  }
  return found;
}

int profile::last_nonzero_index() const noexcept
{
  for ( int i = num_vars_ - 1; i >= 0; --i )
  {
    if ( ( *this )[i] != 0 )
    {
      return i;
    }
  }
  return -1;
}

std::string profile::to_string() const
{
  std::string s = "(";
  for ( int i = 0; i < num_vars_; ++i )
  {
    if ( i != 0 )
    {
      s += ',';
    }
    s += std::to_string( ( *this )[i] );
  }
  s += ')';
  return s;
}

std::strong_ordering operator<=>( const profile& a, const profile& b )
{
  if ( a.num_vars_ != b.num_vars_ )
  {
    return a.num_vars_ <=> b.num_vars_;
  }
  return std::lexicographical_compare_three_way( a.entries_.begin(), a.entries_.begin() + a.num_vars_,
                                                 b.entries_.begin(), b.entries_.begin() + b.num_vars_ );
}

std::size_t profile_hash::operator()( const profile& p ) const noexcept
{
  std::size_t h = static_cast<std::size_t>( p.num_vars() ) * 0x9e3779b97f4a7c15ull;
  for ( int i = 0; i < p.num_vars(); ++i )
  {
    h = ( h ^ static_cast<std::size_t>( p[i] ) ) * 0x100000001b3ull;
  }
  return h;
}

profile profile_of( const minimal_term_set& m )
{
  if ( m.is_constant_one() )
  {
    throw error( error_code::invalid_argument, "the constant-1 function has no profile" );
  }
  std::vector<int> entries( static_cast<std::size_t>( m.num_vars() ), 0 );
  for ( auto term : m.terms() )
  {
    ++entries[static_cast<std::size_t>( popcount( term ) - 1 )];
  }
  return profile( std::span<const int>( entries ) );
}

profile complement_profile( const profile& p )
{
  const int idx = p.single_nonzero_index();
  if ( idx < 0 )
  {
    throw error( error_code::invalid_argument, "complement needs exactly one nonzero entry, got " + p.to_string() );
  }
  const auto level = binomial( p.num_vars(), idx + 1 );
  if ( static_cast<std::uint64_t>( p[idx] ) > level )
  {
    throw error( error_code::out_of_range, "entry exceeds the number of sets of that size" );
  }
  return p.with_entry( idx, static_cast<int>( level ) - p[idx] );
}

profile reverse_dual_profile( const profile& p )
{
  const int n = p.num_vars();
  if ( n < 2 )
  {
    return p;
  }
  auto result = p;
  for ( int i = 0; i < n - 1; ++i )
  {
    result = result.with_entry( i, p[n - 2 - i] );
  }
  return result;
}

profile strip_singleton( const profile& p )
{
  const int n = p.num_vars();
  if ( n < 1 || p[0] == 0 )
  {
    throw error( error_code::invalid_argument, "strip_singleton needs a_1 > 0, got " + p.to_string() );
  }
  if ( n >= 2 && p[n - 1] != 0 )
  {
    throw error( error_code::invalid_argument, "a_1 > 0 forces a_n = 0, got " + p.to_string() );
  }
  std::vector<int> entries;
  for ( int i = 0; i + 1 < n; ++i )
  {
    entries.push_back( p[i] );
  }
  if ( !entries.empty() )
  {
    --entries[0];
  }
  return profile( std::span<const int>( entries ) );
}

profile_generator::profile_generator( int num_vars )
    : num_vars_( num_vars )
{
  if ( num_vars < 0 || num_vars > kMaxProfileVars )
  {
    throw error( error_code::out_of_range, "profile generation supports 0 <= n <= 9" );
  }
  width_ = static_cast<std::size_t>( binomial( num_vars, num_vars / 2 ) ) + 1u;
  counts_.assign( ( static_cast<std::size_t>( num_vars ) + 1u ) * width_, 0u );
  shadow_.assign( counts_.size(), 0u );

  // Level 0: either no empty term or the empty term alone.
  counts_[index( 0, 0 )] = 1;
  counts_[index( 0, 1 )] = 1;
  running_ = 2;

  // Profiles using singletons only, including the zero profile.
  for ( int i = 0; i <= num_vars; ++i )
  {
    profiles_.push_back( num_vars == 0 ? profile( 0 ) : profile( num_vars ).with_entry( 0, i ) );
  }

  for ( int r = 1; r <= num_vars; ++r )
  {
    fill_level( r );
    if ( r != 1 )
    {
      extend_profiles( r );
    }
  }
  total_with_one_ = running_;
}

std::size_t profile_generator::index( int r, std::uint64_t x ) const
{
  return static_cast<std::size_t>( r ) * width_ + static_cast<std::size_t>( x );
}

void profile_generator::fill_level( int r )
{
  auto d = running_;
  auto k = r;
  std::uint64_t j = 0;
  running_ = 0;
  const auto x_max = binomial( num_vars_, r );
  for ( std::uint64_t x = 0; x <= x_max; ++x )
  {
    if ( x >= binomial( k, r ) )
    {
      ++k;
    }
    // After the update C(k-1, r) <= x < C(k, r).
    auto& bound = shadow_[index( r, x )];
    bound = x == 0 ? 0u : shadow( r - 1, x - binomial( k - 1, r ) ) + binomial( k - 1, r - 1 );
    while ( j < bound )
    {
      d -= counts( r - 1, j );
      ++j;
    }
    counts_[index( r, x )] = d;
    running_ += d;
  }
}

void profile_generator::extend_profiles( int r )
{
  // The newest block of profiles has its last nonzero entry at level r - 1.
  const auto recent = counts( r, 0 ) - counts( r - 1, 0 );
  const auto end = profiles_.size();
  const auto begin = end - static_cast<std::size_t>( recent );
  const auto x_max = binomial( num_vars_, r );
  for ( std::uint64_t x = 1; x <= x_max; ++x )
  {
    const auto bound = static_cast<int>( shadow( r, x ) );
    for ( auto i = begin; i < end; ++i )
    {
      const auto& row = profiles_[i];
      if ( row[r - 2] >= bound )
      {
        profiles_.push_back( row.with_entry( r - 2, row[r - 2] - bound ).with_entry( r - 1, static_cast<int>( x ) ) );
      }
    }
  }
}

namespace
{

struct profile_cache
{
  std::mutex mutex;
  std::map<int, std::shared_ptr<const std::vector<profile>>> lists;
};

profile_cache& cache()
{
  static profile_cache instance;
  return instance;
}

std::shared_ptr<const std::vector<profile>> cached_profiles( int num_vars )
{
  auto& c = cache();
  {
    std::lock_guard lock( c.mutex );
    if ( auto it = c.lists.find( num_vars ); it != c.lists.end() )
    {
      return it->second;
    }
  }
  auto list = std::make_shared<const std::vector<profile>>( generate_profiles( num_vars ) );
  std::lock_guard lock( c.mutex );
  return c.lists.emplace( num_vars, std::move( list ) ).first->second;
}

} // namespace

std::vector<profile> generate_profiles( int num_vars )
{
  profile_generator gen( num_vars );
  auto list = gen.profiles();
  std::sort( list.begin(), list.end() );
  if ( std::adjacent_find( list.begin(), list.end() ) != list.end() )
  {
    throw error( error_code::internal, "profile generator emitted a duplicate" );
  }
  return list;
}

std::uint64_t shadow_bound( int num_vars, int r, std::uint64_t x )
{
  if ( num_vars < 1 || r < 1 || r > num_vars || x > binomial( num_vars, r ) )
  {
    throw error( error_code::out_of_range, "shadow_bound needs 0 < r <= n and 0 <= x <= C(n, r)" );
  }
  // The shadow recurrence only looks at earlier levels, so run it standalone.
  std::vector<std::vector<std::uint64_t>> table( static_cast<std::size_t>( r ) + 1u );
  table[0].assign( 2, 0u );
  for ( int level = 1; level <= r; ++level )
  {
    const auto x_max = binomial( num_vars, level );
    auto& row = table[static_cast<std::size_t>( level )];
    row.assign( x_max + 1u, 0u );
    int k = level;
    for ( std::uint64_t y = 0; y <= x_max; ++y )
    {
      if ( y >= binomial( k, level ) )
      {
        ++k;
      }
      if ( y != 0 )
      {
        row[y] = table[static_cast<std::size_t>( level - 1 )][y - binomial( k - 1, level )] + binomial( k - 1, level - 1 );
      }
    }
  }
  return table[static_cast<std::size_t>( r )][x];
}

bool profile_feasible( const profile& p )
{
  if ( p.num_vars() > kMaxProfileVars )
  {
    throw error( error_code::out_of_range, "feasibility is only tabulated for n <= 9" );
  }
  const auto list = cached_profiles( p.num_vars() );
  return std::binary_search( list->begin(), list->end(), p );
}

} // namespace mbf
