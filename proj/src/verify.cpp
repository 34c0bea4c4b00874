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

#include "mbfkit/verify.hpp"

#include "mbfkit/bounds.hpp"
#include "mbfkit/enumerate.hpp"
#include "mbfkit/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mbf
{

namespace
{

using partition = std::set<std::set<std::string>>;

std::vector<int> entries_of( const profile& p )
{
  std::vector<int> out;
  for ( int i = 0; i < p.num_vars(); ++i )
  {
    out.push_back( p[i] );
  }
  return out;
}

template<class... Parts>
std::string describe( const Parts&... parts )
{
  std::ostringstream os;
  ( os << ... << parts );
  return os.str();
}

verify_check check_monotone_set( int n )
{
  const auto expected = oracle::brute_monotone_tables( n );
  std::vector<std::string> found;
  const std::uint64_t size = std::uint64_t( 1 ) << n;
  for ( std::uint64_t bits = 0; bits < ( std::uint64_t( 1 ) << size ); ++bits )
  {
    const auto t = truth_table::from_subset_words( n, { bits } );
    if ( is_monotone( t ) )
    {
      found.push_back( t.to_string() );
    }
  }
  std::sort( found.begin(), found.end() );
  return { "monotone tables match oracle", found == expected, describe( found.size(), " fast vs ", expected.size(), " oracle" ) };
}

verify_check check_partition( int n, const verify_options& options )
{
  const auto orbits = oracle::brute_classes( n );
  partition expected;
  std::vector<std::string> tables;
  for ( const auto& orbit : orbits )
  {
    expected.emplace( orbit.begin(), orbit.end() );
    tables.insert( tables.end(), orbit.begin(), orbit.end() );
  }
  std::map<std::string, std::set<std::string>> groups;
  for ( const auto& s : tables )
  {
    const auto t = truth_table::from_string( s );
    const auto rep = options.canonicalizer ? options.canonicalizer( t ) : canonical_form( t ).canonical;
    groups[rep.to_string()].insert( s );
  }
  partition found;
  for ( auto& [rep, members] : groups )
  {
    found.insert( std::move( members ) );
  }
  return { "class partition matches oracle", found == expected, describe( found.size(), " fast classes vs ", expected.size(), " oracle" ) };
}

verify_check check_census( int n )
{
  const auto census = oracle::brute_profile_census( n );
  std::set<std::vector<int>> expected;
  for ( const auto& [key, counts] : census )
  {
    expected.insert( key );
  }
  std::set<std::vector<int>> found;
  for ( const auto& p : generate_profiles( n ) )
  {
    found.insert( entries_of( p ) );
  }
  return { "profile census matches oracle", found == expected, describe( found.size(), " generated vs ", expected.size(), " realized" ) };
}

verify_check check_per_profile( int n, const counts_report& report )
{
  const auto census = oracle::brute_profile_census( n );
  std::size_t mismatches = census.size() == report.per_profile.size() ? 0 : 1;
  for ( const auto& row : report.per_profile )
  {
    const auto it = census.find( entries_of( row.vector ) );
    if ( it == census.end() || it->second != std::pair{ row.r_count, row.d_count } )
    {
      ++mismatches;
    }
  }
  return { "per-profile counts match oracle", mismatches == 0, describe( mismatches, " mismatching rows of ", report.per_profile.size() ) };
}

verify_check check_shadows( int n )
{
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  for ( int r = 1; r <= n; ++r )
  {
    for ( std::uint64_t x = 0; x <= binomial( n, r ); ++x )
    {
      ++checked;
      if ( shadow_bound( n, r, x ) != oracle::brute_min_shadow( n, r, x ) )
      {
        ++mismatches;
      }
    }
  }
  return { "shadow bounds match oracle", mismatches == 0, describe( mismatches, " mismatches over ", checked, " cases" ) };
}

verify_check check_shortcuts_agree( const counts_report& direct, const counts_report& shortcut )
{
  bool same = direct.per_profile.size() == shortcut.per_profile.size() && direct.r_total == shortcut.r_total &&
              direct.d_total == shortcut.d_total && direct.asymmetric_total == shortcut.asymmetric_total;
  for ( std::size_t i = 0; same && i < direct.per_profile.size(); ++i )
  {
    const auto& a = direct.per_profile[i];
    const auto& b = shortcut.per_profile[i];
    same = a.vector == b.vector && a.r_count == b.r_count && a.d_count == b.d_count && a.trivial_stabilizers == b.trivial_stabilizers;
  }
  return { "shortcut and direct reports agree", same, shortcut.summary() };
}

std::vector<verify_check> check_relations( int n, const counts_report& direct, const counts_report* smaller )
{
  std::size_t complement_pairs = 0, complement_bad = 0;
  std::size_t dual_pairs = 0, dual_bad = 0;
  std::size_t singleton_pairs = 0, singleton_bad = 0;
  for ( const auto& row : direct.per_profile )
  {
    const auto& p = row.vector;
    if ( p.single_nonzero_index() >= 0 )
    {
      if ( const auto* other = direct.find( complement_profile( p ) ) )
      {
        ++complement_pairs;
        complement_bad += ( other->r_count != row.r_count || other->d_count != row.d_count );
      }
    }
    if ( n >= 2 )
    {
      if ( const auto* other = direct.find( reverse_dual_profile( p ) ) )
      {
        ++dual_pairs;
        dual_bad += ( other->r_count != row.r_count || other->d_count != row.d_count );
      }
    }
    if ( smaller && n >= 2 && p[0] > 0 && p[n - 1] == 0 )
    {
      if ( const auto* other = smaller->find( strip_singleton( p ) ) )
      {
        ++singleton_pairs;
        const bool d_ok = row.d_count * p[0] == other->d_count * static_cast<std::uint64_t>( n );
        singleton_bad += ( other->r_count != row.r_count || !d_ok );
      }
    }
  }
  std::vector<verify_check> out;
  out.push_back( { "complement profiles agree", complement_bad == 0, describe( complement_bad, " of ", complement_pairs, " pairs differ" ) } );
  out.push_back( { "reverse dual profiles agree", dual_bad == 0, describe( dual_bad, " of ", dual_pairs, " pairs differ" ) } );
  if ( smaller )
  {
    out.push_back( { "singleton reduction agrees (R equal, D scaled by n/a_1)", singleton_bad == 0,
                     describe( singleton_bad, " of ", singleton_pairs, " pairs differ" ) } );
  }
  return out;
}

} // namespace

bool verify_report::passed() const noexcept
{
  return std::all_of( checks.begin(), checks.end(), []( const verify_check& c ) { return c.passed; } );
}

verify_report verify( int num_vars, const verify_options& options )
{
  if ( num_vars < 0 || num_vars > 6 )
  {
    throw error( error_code::out_of_range, "verification supports 0 <= n <= 6" );
  }
  const int n = num_vars;
  verify_report report{ n, {} };
  auto& checks = report.checks;

  if ( n <= 4 )
  {
    checks.push_back( check_monotone_set( n ) );
  }
  if ( n <= 5 )
  {
    checks.push_back( check_partition( n, options ) );
    checks.push_back( check_census( n ) );
    if ( n >= 1 )
    {
      checks.push_back( check_shadows( n ) );
    }
  }

  count_options direct_options;
  direct_options.jobs = options.jobs;
  direct_options.use_shortcuts = false;
  const auto direct = count_all( n, direct_options );
  count_options shortcut_options;
  shortcut_options.jobs = options.jobs;
  const auto shortcut = count_all( n, shortcut_options );

  if ( n <= 5 )
  {
    checks.push_back( check_per_profile( n, direct ) );
  }
  checks.push_back( check_shortcuts_agree( direct, shortcut ) );
  if ( n >= 1 )
  {
    std::optional<counts_report> smaller;
    if ( n >= 2 )
    {
      smaller = count_all( n - 1, direct_options );
    }
    for ( auto& c : check_relations( n, direct, smaller ? &*smaller : nullptr ) )
    {
      checks.push_back( std::move( c ) );
    }
  }

  const auto d = known_dedekind( n );
  const auto r = known_inequivalent( n );
  const bool totals_ok = d && r && big_uint( direct.d_total ) == *d && direct.r_total == *r;
  checks.push_back( { "totals match known values", totals_ok, direct.summary() } );
  return report;
}

} // namespace mbf
