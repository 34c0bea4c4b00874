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
  \file store.hpp
  \brief Checkpoint files for class lists and the append-only results database

  A profile file starts with a text header

      mbfkit-profile-list
      version 1
      n 5
      profile (0,2,2,0,0)
      classes 7
      words 1
      end

  followed by one binary record per class: the packed 32-bit words of the
  least representative and its orbit size, all little-endian.
*/

#pragma once

#include "enumerate.hpp"
#include "profile.hpp"

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace mbf
{

inline constexpr int kProfileFileVersion = 1;

/// Writes to a temporary file and renames it into place.
void save_profile_list( const profile_class_list& list, const std::filesystem::path& path );

/*! \brief Reads and validates a profile file

  Every record must be monotone, a least representative, carry the correct
  orbit size and have the header's profile.  Errors: error_code::io,
  error_code::format (header), error_code::version_mismatch,
  error_code::dimension_mismatch (n differs from `expected_num_vars`),
  error_code::validation (body).
*/
profile_class_list load_profile_list( const std::filesystem::path& path, std::optional<int> expected_num_vars = std::nullopt );

/// File name used for a profile inside a checkpoint directory, e.g. "p_0-2-2-0-0.mbf".
std::string profile_file_name( const profile& p );

class results_db
{
public:
  struct row
  {
    int num_vars = 0;
    profile vector;
    std::uint64_t r_count = 0;
    std::uint64_t d_count = 0;
    double elapsed_seconds = 0.0;
    std::string timestamp;
  };

  struct totals
  {
    std::size_t rows = 0;
    std::uint64_t r_sum = 0;
    std::uint64_t d_sum = 0;
  };

  /// Opens (or creates) the CSV file and loads its rows.
  explicit results_db( std::filesystem::path path );

  /*! \brief Appends a result row

    Returns false when an identical result is already stored.  Throws
    error_code::result_mismatch when a stored row disagrees.
  */
  bool record( int num_vars, const profile& p, std::uint64_t r_count, std::uint64_t d_count, double elapsed_seconds );

  std::optional<row> find( int num_vars, const profile& p ) const;
  std::vector<row> rows() const;
  totals totals_for( int num_vars ) const;

  const std::filesystem::path& path() const noexcept { return path_; }

private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::vector<row> rows_;
};

} // namespace mbf
