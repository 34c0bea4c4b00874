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
  \file truth_table.hpp
  \brief Truth tables in reverse colex order and minimal-term sets

  A table on n variables has 2^n positions.  Position j holds the output for
  the input in which variable i is set exactly when bit (i-1) of j is clear,
  so position 0 is {1,...,n} and the last position is the empty input.  For
  n = 3 this gives the order {1,2,3}, {2,3}, {1,3}, {3}, {1,2}, {2}, {1}, {}.

  Internally the outputs are stored indexed by input subset (bit m of the
  word array is f(m)).  Because position j and subset m satisfy
  m = 2^n - 1 - j, comparing the stored words as one big unsigned number
  from the top is the same as comparing position strings left to right.
*/

#pragma once

#include "common.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mbf
{

class truth_table
{
public:
  /// Constant-0 table on zero variables.
  truth_table() : truth_table( 0 ) {}

  /// Constant-0 table on `num_vars` variables.
  explicit truth_table( int num_vars );

  static truth_table constant( int num_vars, bool value );

  /*! \brief Parses a position string such as "11101010"

    The string length must be 2^n for some 0 <= n <= kMaxVars.
  */
  static truth_table from_string( std::string_view bits );

  /// Builds a table from subset-indexed 64-bit words (bit m of the array is f(m)).
  static truth_table from_subset_words( int num_vars, std::vector<std::uint64_t> words );

  template<typename Fn>
  static truth_table from_function( int num_vars, Fn&& fn )
  {
    truth_table t( num_vars );
    for ( subset_mask m = 0; m < t.size(); ++m )
    {
      if ( fn( m ) )
      {
        t.words_[m >> 6] |= std::uint64_t( 1 ) << ( m & 63 );
      }
    }
    return t;
  }

  int num_vars() const noexcept { return num_vars_; }
  std::uint32_t size() const noexcept { return std::uint32_t( 1 ) << num_vars_; }

  /// Output for the input subset `input`.
  bool value( subset_mask input ) const noexcept
  {
    return ( words_[input >> 6] >> ( input & 63 ) ) & 1u;
  }

  /// Output at position `j` of the reverse colex order.
  bool at_position( std::uint32_t j ) const noexcept { return value( position_to_input( num_vars_, j ) ); }

  static subset_mask position_to_input( int num_vars, std::uint32_t position ) noexcept
  {
    return ( ( std::uint32_t( 1 ) << num_vars ) - 1u ) & ~position;
  }

  std::span<const std::uint64_t> subset_words() const noexcept { return words_; }

  std::uint32_t count_ones() const noexcept;

  /// Position string, e.g. "11101010".
  std::string to_string() const;

  friend bool operator==( const truth_table&, const truth_table& ) = default;

  /// Lexicographic on the position string: position 0 first, '0' < '1'.
  friend std::strong_ordering operator<=>( const truth_table& a, const truth_table& b );

private:
  int num_vars_;
  std::vector<std::uint64_t> words_;
};

/*! \brief An antichain of variable subsets

  Terms are kept sorted by mask value.  The empty term set is the constant-0
  function and the set {{}} is the constant-1 function.
*/
class minimal_term_set
{
public:
  minimal_term_set() : minimal_term_set( 0, {} ) {}

  /// Throws error_code::not_antichain on duplicates or comparable terms.
  minimal_term_set( int num_vars, std::vector<subset_mask> terms );

  /// Builds from 1-based variable lists, e.g. {{1}, {2, 3}}.
  static minimal_term_set from_lists( int num_vars, std::initializer_list<std::initializer_list<int>> lists );

  int num_vars() const noexcept { return num_vars_; }
  std::span<const subset_mask> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_constant_one() const noexcept { return terms_.size() == 1u && terms_[0] == 0u; }

  /// "{{1},{2,3}}"
  std::string to_string() const;

  friend bool operator==( const minimal_term_set&, const minimal_term_set& ) = default;

private:
  int num_vars_;
  std::vector<subset_mask> terms_;
};

/// True iff no two terms are comparable and none repeats.
bool is_antichain( std::span<const subset_mask> terms );

/// Checks f(S) <= f(S + {i}) for every covering pair.
bool is_monotone( const truth_table& t );

/// Throws error_code::not_monotone for non-monotone tables.
minimal_term_set to_minimal_terms( const truth_table& t );

truth_table from_minimal_terms( const minimal_term_set& m );

/// 32-bit words in position order: word w holds positions 32w..32w+31, position 32w+k at bit k.
std::vector<std::uint32_t> pack( const truth_table& t );

/// Inverse of pack.  Rejects a wrong word count or nonzero padding.
truth_table unpack( std::span<const std::uint32_t> words, int num_vars );

/// Number of 32-bit words pack produces for `num_vars` variables.
constexpr std::size_t packed_word_count( int num_vars ) noexcept
{
  return num_vars <= 5 ? 1u : std::size_t( 1 ) << ( num_vars - 5 );
}

} // namespace mbf
