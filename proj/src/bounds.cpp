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

#include "mbfkit/bounds.hpp"

#include <algorithm>
#include <map>

namespace mbf
{

std::optional<big_uint> known_dedekind( int num_vars )
{
  static const char* const values[] = { "2", "3", "6", "20", "168", "7581", "7828354", "2414682040998", "56130437228687557907788" };
  if ( num_vars < 0 || num_vars > 8 )
  {
    return std::nullopt;
  }
  return big_uint( values[num_vars] );
}

std::optional<std::uint64_t> known_inequivalent( int num_vars )
{
  static constexpr std::uint64_t values[] = { 2, 3, 5, 10, 30, 210, 16353, 490013148 };
  if ( num_vars < 0 || num_vars > 7 )
  {
    return std::nullopt;
  }
  return values[num_vars];
}

high_precision korshunov_log2( int num_vars )
{
  if ( num_vars < 2 )
  {
    throw error( error_code::out_of_range, "the asymptotic formula needs n >= 2" );
  }
  using boost::multiprecision::log;
  using boost::multiprecision::pow;
  const high_precision n = num_vars;
  const high_precision two = 2;
  auto p2 = [&]( const high_precision& e ) { return pow( two, e ); };
  auto c = [&]( int k ) { return high_precision( binomial( num_vars, k ) ); };

  high_precision power_of_two;
  high_precision exponent;
  if ( num_vars % 2 == 0 )
  {
    const int half = num_vars / 2;
    power_of_two = c( half );
    exponent = c( half - 1 ) * ( p2( -n / 2 ) + n * n * p2( -n - 5 ) - n * p2( -n - 4 ) );
  }
  else
  {
    power_of_two = c( ( num_vars - 1 ) / 2 ) + 1;
    exponent = c( ( num_vars - 3 ) / 2 ) * ( p2( ( -n - 3 ) / 2 ) - n * n * p2( -n - 5 ) - n * p2( -n - 3 ) ) +
               c( ( num_vars - 1 ) / 2 ) * ( p2( ( -n - 1 ) / 2 ) - n * n * p2( -n - 4 ) );
  }
  return power_of_two + exponent / log( two );
}

high_precision korshunov_estimate( int num_vars )
{
  return boost::multiprecision::pow( high_precision( 2 ), korshunov_log2( num_vars ) );
}

std::uint64_t lower_bound_r( int num_vars, const big_uint& dedekind )
{
  if ( num_vars < 0 || num_vars > 20 )
  {
    throw error( error_code::out_of_range, "variable count out of range" );
  }
  const big_uint group = factorial( num_vars );
  return static_cast<std::uint64_t>( ( dedekind + group - 1 ) / group );
}

std::vector<class_entry> classes_with_few_terms( int num_vars, int max_terms )
{
  if ( num_vars < 0 || num_vars > kMaxEnumVars )
  {
    throw error( error_code::out_of_range, "enumeration supports 0 <= n <= 7" );
  }
  const subset_mask size = subset_mask( 1 ) << num_vars;
  std::vector<detail::block<2>> upsets( size );
  for ( subset_mask s = 0; s < size; ++s )
  {
    for ( subset_mask m = 0; m < size; ++m )
    {
      if ( ( m & s ) == s )
      {
        upsets[s][m >> 6] |= std::uint64_t( 1 ) << ( m & 63 );
      }
    }
  }
  auto less = []( const detail::block<2>& a, const detail::block<2>& b ) { return detail::less( a, b ); };

  std::vector<class_entry> all{ class_entry{} };
  std::vector<class_entry> level{ class_entry{} };
  for ( int terms = 1; terms <= max_terms && !level.empty(); ++terms )
  {
    std::map<detail::block<2>, std::uint32_t, decltype( less )> next( less );
    for ( const auto& entry : level )
    {
      const auto t = to_truth_table( entry.table, num_vars );
      const auto minimal = to_minimal_terms( t );
      for ( subset_mask s = 1; s < size; ++s )
      {
        const auto existing = minimal.terms();
        const bool comparable = std::any_of( existing.begin(), existing.end(), [s]( subset_mask m ) { return ( m & s ) == m || ( m & s ) == s; } );
        if ( comparable )
        {
          continue;
        }
        const detail::block<2> extended{ entry.table[0] | upsets[s][0], entry.table[1] | upsets[s][1] };
        const auto canon = canonical_form( to_truth_table( extended, num_vars ) );
        next.emplace( to_block( canon.canonical ), static_cast<std::uint32_t>( canon.orbit_size ) );
      }
    }
    level.clear();
    for ( const auto& [table, orbit] : next )
    {
      level.push_back( { table, orbit } );
    }
    all.insert( all.end(), level.begin(), level.end() );
  }
  return all;
}

std::uint64_t refined_lower_bound_r( int num_vars, const big_uint& dedekind, const refined_bound_rule& rule )
{
  const std::uint64_t group = factorial( num_vars );
  // The constant-1 function is a class of size 1.
  big_uint slack = group - 1;
  for ( const auto& c : classes_with_few_terms( num_vars, std::max( rule.all_up_to_terms, rule.max_terms ) ) )
  {
    const auto terms = static_cast<int>( to_minimal_terms( to_truth_table( c.table, num_vars ) ).size() );
    if ( terms > rule.all_up_to_terms && group / c.orbit_size < rule.min_automorphisms )
    {
      continue;
    }
    slack += group - c.orbit_size;
  }
  const big_uint total = dedekind + slack;
  return static_cast<std::uint64_t>( ( total + group - 1 ) / group );
}

} // namespace mbf
