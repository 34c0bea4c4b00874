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
  \file verify.hpp
  \brief Cross-checks of the fast paths against the brute-force oracle
*/

#pragma once

#include "truth_table.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mbf
{

struct verify_options
{
  unsigned jobs = 0;
  /// Replaces the least-representative map in the partition check (fault injection).
  std::function<truth_table( const truth_table& )> canonicalizer;
};

struct verify_check
{
  std::string name;
  bool passed = false;
  std::string detail;
};

struct verify_report
{
  int num_vars = 0;
  std::vector<verify_check> checks;

  bool passed() const noexcept;
};

/*! \brief Runs every check that applies to n (0 <= n <= 6)

  n <= 4: monotone table set and class partition against the oracle.
  n <= 5: class partition, profile census, per-profile counts, shadow bounds.
  n >= 1: shortcut relations on a report computed without shortcuts, and
  agreement between runs with and without shortcuts.
  All n: totals against the known values.
*/
verify_report verify( int num_vars, const verify_options& options = {} );

} // namespace mbf
