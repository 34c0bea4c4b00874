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
  \file common.hpp
  \brief Error type, limits and small combinatorial helpers shared by all modules
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mbf
{

/// Largest variable count a truth table may have.
inline constexpr int kMaxVars = 10;

/// Largest variable count the enumeration engine handles.
inline constexpr int kMaxEnumVars = 7;

/// A subset of the variables {1..n}; variable i is present when bit (i-1) is set.
using subset_mask = std::uint32_t;

enum class error_code
{
  invalid_argument = 1,
  not_monotone,
  not_antichain,
  dimension_mismatch,
  out_of_range,
  infeasible_profile,
  io,
  format,
  version_mismatch,
  validation,
  result_mismatch,
  interrupted,
  internal
};

const char* to_string( error_code code ) noexcept;

/*! \brief Exception thrown by every mbfkit operation

  The code lets the C interface map failures onto distinct status values.
*/
class error : public std::runtime_error
{
public:
  error( error_code code, const std::string& what )
      : std::runtime_error( what ), code_( code )
  {
  }

  error_code code() const noexcept { return code_; }

private:
  error_code code_;
};

constexpr std::uint64_t binomial( int n, int k ) noexcept
{
  if ( k < 0 || n < 0 || k > n )
  {
    return 0;
  }
  if ( k > n - k )
  {
    k = n - k;
  }
  std::uint64_t result = 1;
  for ( int i = 1; i <= k; ++i )
  {
    result = result * static_cast<std::uint64_t>( n - k + i ) / static_cast<std::uint64_t>( i );
  }
  return result;
}

constexpr std::uint64_t factorial( int n ) noexcept
{
  std::uint64_t result = 1;
  for ( int i = 2; i <= n; ++i )
  {
    result *= static_cast<std::uint64_t>( i );
  }
  return result;
}

inline int popcount( subset_mask m ) noexcept
{
  return __builtin_popcount( m );
}

} // namespace mbf
