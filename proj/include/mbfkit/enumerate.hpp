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
  \file enumerate.hpp
  \brief Profile-by-profile generation of inequivalent monotone functions

  Classes of a profile are built from the classes of a profile that is one
  smaller in a single coordinate j: every base class is extended by each
  j-set incomparable to all of its minimal terms, the result is reduced to
  its least representative and duplicates are dropped.
*/

#pragma once

#include "common.hpp"
#include "detail/canon.hpp"
#include "profile.hpp"
#include "symmetry.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace mbf
{

/// Compact class record used by the engine (n <= 7).
struct class_entry
{
  detail::block<2> table{};
  std::uint32_t orbit_size = 1;

  friend bool operator==( const class_entry&, const class_entry& ) = default;
};

/*! \brief All inequivalent functions with one profile

  Entries are sorted by least representative and pairwise distinct.
*/
class profile_class_list
{
public:
  profile_class_list() = default;

  /// Sorts the entries; throws error_code::validation on duplicates.
  profile_class_list( profile target, std::vector<class_entry> entries );

  const profile& profile_vector() const noexcept { return profile_; }
  int num_vars() const noexcept { return profile_.num_vars(); }

  std::span<const class_entry> entries() const noexcept { return entries_; }

  std::uint64_t r_count() const noexcept { return entries_.size(); }
  std::uint64_t d_count() const noexcept;

  /// Classes whose stabilizer is trivial (orbit size n!).
  std::uint64_t trivial_stabilizer_count() const noexcept;

  truth_table table( std::size_t i ) const;
  class_record record( std::size_t i ) const;

  friend bool operator==( const profile_class_list&, const profile_class_list& ) = default;

private:
  profile profile_;
  std::vector<class_entry> entries_;
};

/// Converts a compact entry table to a truth table on `num_vars` variables.
truth_table to_truth_table( const detail::block<2>& table, int num_vars );

/// Compact form of a table with at most 7 variables.
detail::block<2> to_block( const truth_table& t );

/// The list holding only the constant-0 function.
profile_class_list zero_profile_list( int num_vars );

/*! \brief Extends every class of `base` by one incomparable set of size `cardinality`

  Throws error_code::infeasible_profile when the target profile is not
  realizable.  `jobs` = 0 uses the available hardware parallelism.
*/
profile_class_list extend_profile( const profile_class_list& base, int cardinality, unsigned jobs = 0 );

/// Classes of k distinct `cardinality`-sets of [n].
profile_class_list seed_profile( int num_vars, int cardinality, int k, unsigned jobs = 0 );

enum class path_order
{
  /// Add the smallest sets first (sets of size 1, then size 2, ...).
  small_sets_first,
  /// Add the largest sets first.
  large_sets_first
};

/// Classes of an arbitrary feasible profile, built along the given lattice path.
profile_class_list enumerate_profile( const profile& p, path_order order = path_order::small_sets_first, unsigned jobs = 0 );

struct profile_count
{
  std::uint64_t r_count = 0;
  std::uint64_t d_count = 0;
};

profile_count count_profile( const profile& p, unsigned jobs = 0 );

/// How a per-profile count was obtained.
enum class profile_source
{
  enumerated,
  complement,    ///< single-entry complement C(n, i) - a_i
  singleton,     ///< a_1 > 0, taken from n - 1 variables
  reverse_dual   ///< first n - 1 entries reversed
};

const char* to_string( profile_source source ) noexcept;

struct profile_result
{
  profile vector;
  std::uint64_t r_count = 0;
  std::uint64_t d_count = 0;
  std::uint64_t trivial_stabilizers = 0;
  double elapsed_seconds = 0.0;
  profile_source source = profile_source::enumerated;
};

struct count_options
{
  unsigned jobs = 0;
  bool use_shortcuts = true;
  /// Required for n = 7.
  bool extended = false;
  /// Per-profile class lists and the results database live under this directory.
  std::optional<std::filesystem::path> checkpoint_dir;
  /// Stop with error_code::interrupted once this many profiles were newly enumerated.
  std::optional<std::size_t> stop_after;
  std::function<void( const std::string& )> log;
};

struct counts_report
{
  int num_vars = 0;
  /// Sorted by profile.
  std::vector<profile_result> per_profile;
  /// Totals include the constant-1 function.
  std::uint64_t r_total = 0;
  std::uint64_t d_total = 0;
  /// Number of minimal terms -> (R_k, D_k); the constant-1 function is not attributed.
  std::map<int, std::pair<std::uint64_t, std::uint64_t>> by_k;
  std::uint64_t asymmetric_total = 0;

  const profile_result* find( const profile& p ) const;

  /// CSV with columns profile,R_count,D_count,elapsed_seconds followed by a totals line.
  void write_csv( std::ostream& os, bool include_elapsed = true ) const;

  /// "R(5)=210 D(5)=7581"
  std::string summary() const;
};

counts_report count_all( int num_vars, const count_options& options = {} );

/// R_k: sum of R-counts over profiles with k minimal terms.
std::uint64_t count_by_minterms( const counts_report& report, int k );

/// Classes whose only automorphism is the identity (none for n < 2).
std::uint64_t count_asymmetric( const counts_report& report );

} // namespace mbf
