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
  \file bounds.hpp
  \brief Known Dedekind numbers, Korshunov's asymptotic estimate and lower bounds on R(n)
*/

#pragma once

#include "enumerate.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace mbf
{

using high_precision = boost::multiprecision::cpp_bin_float_50;
using big_uint = boost::multiprecision::cpp_int;

/// D(n) for 0 <= n <= 8, empty otherwise.
std::optional<big_uint> known_dedekind( int num_vars );

/// R(n) for 0 <= n <= 7, empty otherwise.
std::optional<std::uint64_t> known_inequivalent( int num_vars );

/*! \brief Korshunov's asymptotic formula for D(n)

  Even n:
    2^C(n, n/2) exp[ C(n, n/2 - 1) (2^(-n/2) + n^2 2^(-n-5) - n 2^(-n-4)) ]
  Odd n:
    2^(C(n, (n-1)/2) + 1) exp[ C(n, (n-3)/2) (2^((-n-3)/2) - n^2 2^(-n-5) - n 2^(-n-3))
                             + C(n, (n-1)/2) (2^((-n-1)/2) - n^2 2^(-n-4)) ]
  Requires n >= 2.
*/
high_precision korshunov_estimate( int num_vars );

/// log2 of korshunov_estimate, exact up to floating rounding.
high_precision korshunov_log2( int num_vars );

/// ceil(D(n) / n!): every class holds at most n! functions.
std::uint64_t lower_bound_r( int num_vars, const big_uint& dedekind );

/// Classes with at most `max_terms` minimal terms, found by repeated extension (n <= 7).
std::vector<class_entry> classes_with_few_terms( int num_vars, int max_terms );

/// Which known classes sharpen the lower bound.
struct refined_bound_rule
{
  /// Every class with at most this many minimal terms is used.
  int all_up_to_terms = 2;
  /// Classes with more terms, up to this many, are used when highly symmetric.
  int max_terms = 4;
  /// Highly symmetric: at least this many automorphisms.
  std::uint64_t min_automorphisms = 6;
};

/*! \brief Lower bound on R(n) sharpened by known small classes

  R(n) = D(n)/n! + sum over classes c of (n! - |c|)/n!, and every term of the
  sum is nonnegative, so any set of known classes gives
  R(n) >= ceil((D(n) + sum (n! - |c|)) / n!).  The constant-1 class is always
  used; other classes are selected by `rule`.
*/
std::uint64_t refined_lower_bound_r( int num_vars, const big_uint& dedekind, const refined_bound_rule& rule = {} );

} // namespace mbf
