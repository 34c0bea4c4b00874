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
  \file profile.hpp
  \brief Profile vectors, their count-preserving maps, and profile generation

  The profile of a function f other than constant 1 is (a_1, ..., a_n) where
  a_i is the number of minimal terms of f with exactly i variables.
*/

#pragma once

#include "common.hpp"
#include "truth_table.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mbf
{

class profile
{
public:
  profile() = default;

  /// All-zero profile of length `num_vars`.
  explicit profile( int num_vars );

  profile( std::initializer_list<int> entries );

  explicit profile( std::span<const int> entries );

  /// Parses "(0,2,2,0,0)".  The empty profile is "()".
  static profile parse( std::string_view text );

  int num_vars() const noexcept { return num_vars_; }

  /// Entry for terms of cardinality `idx + 1`.
  int operator[]( int idx ) const noexcept { return entries_[static_cast<std::size_t>( idx )]; }

  /// Number of terms of cardinality `cardinality` (1-based).
  int of_size( int cardinality ) const noexcept { return ( *this )[cardinality - 1]; }

  profile with_entry( int idx, int value ) const;

  /// Number of minimal terms.
  int total() const noexcept;

  bool is_zero() const noexcept { return total() == 0; }

  /// Index of the single nonzero entry, or -1 if there are zero or several.
  int single_nonzero_index() const noexcept;

  /// Index of the last nonzero entry, or -1 for the zero profile.
  int last_nonzero_index() const noexcept;

  std::string to_string() const;

  friend bool operator==( const profile&, const profile& ) = default;
  friend std::strong_ordering operator<=>( const profile& a, const profile& b );

private:
  std::uint8_t num_vars_ = 0;
  std::array<std::uint16_t, kMaxVars> entries_{};
};

struct profile_hash
{
  std::size_t operator()( const profile& p ) const noexcept;
};

/// Profile of an antichain.  Throws error_code::invalid_argument for the constant-1 antichain {{}}.
profile profile_of( const minimal_term_set& m );

/// Replaces the single nonzero entry a_i by C(n, i) - a_i.
profile complement_profile( const profile& p );

/// (a_1, ..., a_{n-1}, a_n) -> (a_{n-1}, ..., a_1, a_n).
profile reverse_dual_profile( const profile& p );

/// (a_1, ..., a_n) over n variables -> (a_1 - 1, a_2, ..., a_{n-1}) over n - 1 variables.
profile strip_singleton( const profile& p );

/*! \brief State of the profile generator

  `counts(r, x)` is the number of profiles on levels 0..r whose level-r entry
  is x, where level 0 stands for the empty term (the constant-1 function).
  `shadow(r, x)` is the smallest number of (r-1)-sets contained in some
  member of a family of x distinct r-sets.
*/
class profile_generator
{
public:
  explicit profile_generator( int num_vars );

  int num_vars() const noexcept { return num_vars_; }

  std::uint64_t counts( int r, std::uint64_t x ) const { return counts_[index( r, x )]; }
  std::uint64_t shadow( int r, std::uint64_t x ) const { return shadow_[index( r, x )]; }

  /// All profiles in the order the generator emits them (not sorted).
  const std::vector<profile>& profiles() const noexcept { return profiles_; }

  /// The running profile total `s` after the last level (profiles + 1).
  std::uint64_t total_with_constant_one() const noexcept { return total_with_one_; }

private:
  std::size_t index( int r, std::uint64_t x ) const;

  void fill_level( int r );
  void extend_profiles( int r );

  int num_vars_;
  std::size_t width_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> shadow_;
  std::vector<profile> profiles_;
  std::uint64_t running_ = 2;
  std::uint64_t total_with_one_ = 0;
};

/// Every realizable profile on `num_vars` (0 <= num_vars <= 9) variables, sorted lexicographically.
std::vector<profile> generate_profiles( int num_vars );

/// Minimum shadow size of x distinct r-subsets of [n].
std::uint64_t shadow_bound( int num_vars, int r, std::uint64_t x );

/// Membership in generate_profiles(p.num_vars()).  False for lengths above 9.
bool profile_feasible( const profile& p );

} // namespace mbf
