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

#include "mbfkit/symmetry.hpp"

#include "mbfkit/detail/canon.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <vector>

namespace mbf
{

namespace detail
{

namespace
{

std::vector<std::uint8_t> steinhaus_johnson_trotter( int n )
{
  std::vector<std::uint8_t> swaps;
  if ( n < 2 )
  {
    return swaps;
  }
  swaps.reserve( factorial( n ) - 1u );
  std::vector<int> perm( static_cast<std::size_t>( n ) );
  std::iota( perm.begin(), perm.end(), 0 );
  std::vector<int> dir( static_cast<std::size_t>( n ), -1 ); // indexed by element
  while ( true )
  {
    int mobile_pos = -1;
    for ( int i = 0; i < n; ++i )
    {
      const int e = perm[static_cast<std::size_t>( i )];
      const int j = i + dir[static_cast<std::size_t>( e )];
      if ( j < 0 || j >= n || perm[static_cast<std::size_t>( j )] > e )
      {
        continue;
      }
      if ( mobile_pos < 0 || e > perm[static_cast<std::size_t>( mobile_pos )] )
      {
        mobile_pos = i;
      }
    }
    if ( mobile_pos < 0 )
    {
      break;
    }
    const int e = perm[static_cast<std::size_t>( mobile_pos )];
    const int j = mobile_pos + dir[static_cast<std::size_t>( e )];
    std::swap( perm[static_cast<std::size_t>( mobile_pos )], perm[static_cast<std::size_t>( j )] );
    swaps.push_back( static_cast<std::uint8_t>( std::min( mobile_pos, j ) ) );
    for ( int f = e + 1; f < n; ++f )
    {
      dir[static_cast<std::size_t>( f )] = -dir[static_cast<std::size_t>( f )];
    }
  }
  return swaps;
}

} // namespace

std::span<const std::uint8_t> plain_changes( int num_vars )
{
  static std::array<std::vector<std::uint8_t>, kMaxVars + 1> sequences;
  static std::array<std::once_flag, kMaxVars + 1> flags;
  const auto idx = static_cast<std::size_t>( num_vars );
  std::call_once( flags[idx], [&] { sequences[idx] = steinhaus_johnson_trotter( num_vars ); } );
  return sequences[idx];
}

} // namespace detail

variable_permutation variable_permutation::identity( int num_vars )
{
  if ( num_vars < 0 || num_vars > kMaxVars )
  {
    throw error( error_code::out_of_range, "permutation size out of range" );
  }
  variable_permutation p;
  p.num_vars_ = num_vars;
  for ( int i = 0; i < num_vars; ++i )
  {
    p.image_[static_cast<std::size_t>( i )] = static_cast<std::uint8_t>( i );
  }
  return p;
}

variable_permutation variable_permutation::transposition( int num_vars, int a, int b )
{
  auto p = identity( num_vars );
  if ( a < 1 || b < 1 || a > num_vars || b > num_vars )
  {
    throw error( error_code::out_of_range, "transposition index out of range" );
  }
  std::swap( p.image_[static_cast<std::size_t>( a - 1 )], p.image_[static_cast<std::size_t>( b - 1 )] );
  return p;
}

variable_permutation variable_permutation::from_images( std::span<const int> images )
{
  auto p = identity( static_cast<int>( images.size() ) );
  std::array<bool, kMaxVars> seen{};
  for ( std::size_t i = 0; i < images.size(); ++i )
  {
    const int v = images[i];
    if ( v < 1 || v > p.num_vars_ || seen[static_cast<std::size_t>( v - 1 )] )
    {
      throw error( error_code::invalid_argument, "images do not form a bijection" );
    }
    seen[static_cast<std::size_t>( v - 1 )] = true;
    p.image_[i] = static_cast<std::uint8_t>( v - 1 );
  }
  return p;
}

subset_mask variable_permutation::apply( subset_mask s ) const noexcept
{
  subset_mask result = 0;
  for ( ; s != 0u; s &= s - 1u )
  {
    result |= subset_mask( 1 ) << image_[static_cast<std::size_t>( __builtin_ctz( s ) )];
  }
  return result;
}

variable_permutation variable_permutation::inverse() const
{
  auto p = *this;
  for ( int i = 0; i < num_vars_; ++i )
  {
    p.image_[image_[static_cast<std::size_t>( i )]] = static_cast<std::uint8_t>( i );
  }
  return p;
}

variable_permutation variable_permutation::compose( const variable_permutation& other ) const
{
  if ( other.num_vars_ != num_vars_ )
  {
    throw error( error_code::dimension_mismatch, "composing permutations of different sizes" );
  }
  auto p = *this;
  for ( int i = 0; i < num_vars_; ++i )
  {
    p.image_[static_cast<std::size_t>( i )] = image_[other.image_[static_cast<std::size_t>( i )]];
  }
  return p;
}

truth_table apply_permutation( const truth_table& t, const variable_permutation& p )
{
  if ( t.num_vars() != p.num_vars() )
  {
    throw error( error_code::dimension_mismatch, "permutation and table differ in variable count" );
  }
  const auto inv = p.inverse();
  std::vector<subset_mask> source( t.size() );
  for ( subset_mask m = 0; m < t.size(); ++m )
  {
    source[m] = inv.apply( m );
  }
  return truth_table::from_function( t.num_vars(), [&]( subset_mask m ) { return t.value( source[m] ); } );
}

namespace
{

template<std::size_t W>
class_record canonical_form_fixed( const truth_table& t )
{
  detail::block<W> b{};
  const auto words = t.subset_words();
  std::copy( words.begin(), words.end(), b.begin() );
  const auto res = detail::canonicalize<W>( b, t.num_vars() );
  std::vector<std::uint64_t> out( words.size() );
  std::copy_n( res.canonical.begin(), words.size(), out.begin() );
  const auto group = factorial( t.num_vars() );
  return { truth_table::from_subset_words( t.num_vars(), std::move( out ) ), group / res.automorphisms, res.automorphisms };
}

} // namespace

class_record canonical_form( const truth_table& t )
{
  if ( !is_monotone( t ) )
  {
    throw error( error_code::not_monotone, "canonical form requested for a non-monotone table" );
  }
  switch ( t.num_vars() )
  {
  case 7: return canonical_form_fixed<2>( t );
  case 8: return canonical_form_fixed<4>( t );
  case 9: return canonical_form_fixed<8>( t );
  case 10: return canonical_form_fixed<16>( t );
  default: return canonical_form_fixed<1>( t );
  }
}

bool is_asymmetric( const truth_table& t )
{
  const auto record = canonical_form( t );
  return t.num_vars() >= 2 && record.automorphism_count == 1u;
}

} // namespace mbf
