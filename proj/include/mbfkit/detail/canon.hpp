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

/*!
  \file canon.hpp
  \brief Fixed-width subset-indexed tables and orbit minimization

  A block of W 64-bit words holds a table on up to 6 + log2(W) variables,
  bit m of the block being f(m).  Variables 1..6 live inside a word and
  variables 7.. select the word.
*/

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace mbf::detail
{

template<std::size_t W>
using block = std::array<std::uint64_t, W>;

/*! \brief Adjacent transpositions visiting every permutation of n items

  Entry v means "swap variables v and v+1" (0-based).  Starting from the
  identity, applying the n! - 1 swaps in order visits each element of S_n
  exactly once (Steinhaus-Johnson-Trotter order).  Cached per n.
*/
std::span<const std::uint8_t> plain_changes( int num_vars );

inline constexpr std::array<std::uint64_t, 5> kInWordSwapMask = {
    0x2222222222222222ull, 0x0c0c0c0c0c0c0c0cull, 0x00f000f000f000f0ull,
    0x0000ff000000ff00ull, 0x00000000ffff0000ull };

/// Exchanges variables v and v+1 (0-based) of the table in place.
template<std::size_t W>
inline void swap_adjacent( block<W>& t, int v ) noexcept
{
  if ( v < 5 )
  {
    const auto shift = 1u << v;
    const auto mask = kInWordSwapMask[static_cast<std::size_t>( v )];
    for ( auto& x : t )
    {
      const auto d = ( ( x >> shift ) ^ x ) & mask;
      x ^= d ^ ( d << shift );
    }
  }
  else if ( v == 5 )
  {
    for ( std::size_t w = 0; w + 1 < W; w += 2 )
    {
      const auto d = ( ( t[w + 1] << 32 ) ^ t[w] ) & 0xffffffff00000000ull;
      t[w] ^= d;
      t[w + 1] ^= d >> 32;
    }
  }
  else
  {
    const std::size_t low = std::size_t( 1 ) << ( v - 6 );
    for ( std::size_t w = 0; w < W; ++w )
    {
      if ( ( w & low ) != 0u && ( w & ( low << 1 ) ) == 0u )
      {
        std::swap( t[w], t[w + low] );
      }
    }
  }
}

/// Lexicographic order of position strings (highest subset first).
template<std::size_t W>
inline bool less( const block<W>& a, const block<W>& b ) noexcept
{
  for ( std::size_t i = W; i-- > 0; )
  {
    if ( a[i] != b[i] )
    {
      return a[i] < b[i];
    }
  }
  return false;
}

template<std::size_t W>
struct canon_result
{
  block<W> canonical;
  std::uint64_t automorphisms;
};

/// Least table in the S_n orbit of `t` plus the size of its stabilizer.
template<std::size_t W>
canon_result<W> canonicalize( const block<W>& t, int num_vars )
{
  canon_result<W> result{ t, 1u };
  auto current = t;
  for ( auto v : plain_changes( num_vars ) )
  {
    swap_adjacent( current, v );
    if ( current == t )
    {
      ++result.automorphisms;
    }
    else if ( less( current, result.canonical ) )
    {
      result.canonical = current;
    }
  }
  return result;
}

} // namespace mbf::detail
