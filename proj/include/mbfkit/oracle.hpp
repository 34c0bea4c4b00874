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
  \file oracle.hpp
  \brief Brute-force reference computations for small n

  Nothing here calls into the truth table, profile, symmetry or enumeration
  code.  Inputs are 0/1 vectors, tables are '0'/'1' strings in reverse colex
  order (sorted here from the order's definition), and orbits are found by
  running std::next_permutation over the variables.
*/

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mbf::oracle
{

using input_vector = std::vector<int>;

/// All of {0,1}^n, largest first in colex order.
std::vector<input_vector> reverse_colex_inputs( int num_vars );

/// Monotone tables among all 2^(2^n) tables, checked over every comparable pair (n <= 4).
std::vector<std::string> brute_monotone_tables( int num_vars );

/// Every antichain of subsets of [n] (n <= 5); a subset is a sorted list of 1-based variables.
std::vector<std::vector<std::vector<int>>> brute_antichains( int num_vars );

/// Orbits of all monotone tables under renaming (n <= 5).  Each orbit and the list are sorted.
std::vector<std::vector<std::string>> brute_classes( int num_vars );

/// Smallest shadow of x distinct r-subsets of [n], by exhaustive search over families.
std::uint64_t brute_min_shadow( int num_vars, int r, std::uint64_t x );

/// Profile entries -> (inequivalent count, labelled count), constant 1 excluded (n <= 5).
std::map<std::vector<int>, std::pair<std::uint64_t, std::uint64_t>> brute_profile_census( int num_vars );

} // namespace mbf::oracle
