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
  \file symmetry.hpp
  \brief Renaming variables, least representatives and automorphism counts
*/

#pragma once

#include "common.hpp"
#include "truth_table.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace mbf
{

/// A bijection on the variables {1..n}.
class variable_permutation
{
public:
  static variable_permutation identity( int num_vars );

  /// Exchanges variables a and b (1-based).
  static variable_permutation transposition( int num_vars, int a, int b );

  /// `images[i - 1]` is the image of variable i (1-based values).
  static variable_permutation from_images( std::span<const int> images );
  static variable_permutation from_images( std::initializer_list<int> images )
  {
    return from_images( std::span<const int>( images.begin(), images.size() ) );
  }

  int num_vars() const noexcept { return num_vars_; }

  /// Image of variable i (1-based).
  int operator()( int i ) const noexcept { return image_[static_cast<std::size_t>( i - 1 )] + 1; }

  /// Image of a subset.
  subset_mask apply( subset_mask s ) const noexcept;

  variable_permutation inverse() const;

  /// (this * other)(i) = this(other(i)).
  variable_permutation compose( const variable_permutation& other ) const;

  friend bool operator==( const variable_permutation&, const variable_permutation& ) = default;

private:
  int num_vars_ = 0;
  std::array<std::uint8_t, kMaxVars> image_{};
};

/*! \brief Renames the variables of `t` along `p`

  The result g satisfies g(p(S)) = f(S), so a minimal term T of f becomes the
  minimal term p(T) of g.
*/
truth_table apply_permutation( const truth_table& t, const variable_permutation& p );

struct class_record
{
  truth_table canonical;
  std::uint64_t orbit_size = 1;
  std::uint64_t automorphism_count = 1;

  friend bool operator==( const class_record&, const class_record& ) = default;
};

/*! \brief Least representative of the orbit of a monotone table

  The least representative is the minimum of the orbit in the order of
  truth_table::operator<=>, i.e. the position string compared left to right
  with '0' < '1'.  Throws error_code::not_monotone.
*/
class_record canonical_form( const truth_table& t );

/// True iff n >= 2 and only the identity fixes `t`.  Throws error_code::not_monotone.
bool is_asymmetric( const truth_table& t );

} // namespace mbf
