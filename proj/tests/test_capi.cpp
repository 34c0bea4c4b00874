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

#include <doctest.h>

#include <mbfkit/mbfkit.h>

#include <string>
#include <vector>

namespace
{

std::string summary_of( const mbf_report* report )
{
  std::size_t needed = 0;
  CHECK( mbf_report_summary( report, nullptr, 0, &needed ) == MBF_BUFFER_TOO_SMALL );
  std::string text( needed, '\0' );
  REQUIRE( mbf_report_summary( report, text.data(), text.size(), &needed ) == MBF_OK );
  text.resize( needed - 1 );
  return text;
}

} // namespace

TEST_SUITE( "capi" )
{
  TEST_CASE( "profiles" )
  {
    mbf_profiles* profiles = nullptr;
    REQUIRE( mbf_profiles_generate( 5, &profiles ) == MBF_OK );
    CHECK( mbf_profiles_count( profiles ) == 95 );
    char buffer[32];
    CHECK( mbf_profiles_get( profiles, 0, buffer, sizeof buffer, nullptr ) == MBF_OK );
    CHECK( std::string( buffer ) == "(0,0,0,0,0)" );
    CHECK( mbf_profiles_get( profiles, 95, buffer, sizeof buffer, nullptr ) == MBF_OUT_OF_RANGE );
    mbf_profiles_free( profiles );
    CHECK( mbf_profiles_generate( 10, &profiles ) == MBF_OUT_OF_RANGE );
    CHECK( std::string( mbf_last_error() ).size() > 0 );
    mbf_profiles_free( nullptr );
  }

  TEST_CASE( "counting" )
  {
    mbf_count_options options;
    mbf_count_options_init( &options );
    mbf_report* report = nullptr;
    REQUIRE( mbf_count_all( 5, &options, &report ) == MBF_OK );
    CHECK( summary_of( report ) == "R(5)=210 D(5)=7581" );
    std::uint64_t r = 0, d = 0, asym = 0;
    CHECK( mbf_report_totals( report, &r, &d, &asym ) == MBF_OK );
    CHECK( asym == 7 );
    CHECK( mbf_report_by_minterms( report, 2, &r, nullptr ) == MBF_OK );
    CHECK( r == 13 );
    CHECK( mbf_report_lookup( report, "(0,3,1,0,0)", &r, &d ) == MBF_OK );
    CHECK( r == 6 );
    CHECK( mbf_report_lookup( report, "(0,11,0,0,0)", &r, &d ) == MBF_INFEASIBLE_PROFILE );
    CHECK( mbf_report_profile_count( report ) == 95 );
    mbf_report_free( report );

    CHECK( mbf_count_all( 7, nullptr, &report ) == MBF_INVALID_ARGUMENT );
    CHECK( mbf_count_profile( "(0,3,2,0,0)", 0, &r, &d ) == MBF_OK );
    CHECK( r == 6 );
    CHECK( mbf_count_profile( "(0,3,2", 0, &r, &d ) != MBF_OK );
  }

  TEST_CASE( "verification and fault injection" )
  {
    mbf_verify_result* result = nullptr;
    REQUIRE( mbf_verify( 4, 0, 0, &result ) == MBF_OK );
    CHECK( mbf_verify_passed( result ) == 1 );
    CHECK( mbf_verify_check_count( result ) > 3 );
    mbf_verify_free( result );

    REQUIRE( mbf_verify( 4, MBF_VERIFY_INJECT_CANONICAL_FAULT, 0, &result ) == MBF_OK );
    CHECK( mbf_verify_passed( result ) == 0 );
    mbf_verify_free( result );
  }

  TEST_CASE( "tables" )
  {
    mbf_table* t = nullptr;
    REQUIRE( mbf_table_from_string( "11101010", &t ) == MBF_OK );
    CHECK( mbf_table_is_monotone( t ) == 1 );
    char buffer[64];
    CHECK( mbf_table_minimal_terms( t, buffer, sizeof buffer, nullptr ) == MBF_OK );
    CHECK( std::string( buffer ) == "{{1},{2,3}}" );
    CHECK( mbf_table_profile( t, buffer, sizeof buffer, nullptr ) == MBF_OK );
    CHECK( std::string( buffer ) == "(1,1,0)" );
    mbf_table* c = nullptr;
    std::uint64_t orbit = 0, aut = 0;
    CHECK( mbf_table_canonical( t, &c, &orbit, &aut ) == MBF_OK );
    CHECK( orbit * aut == 6 );
    mbf_table_free( c );
    mbf_table_free( t );

    const std::uint32_t words[] = { 20938623u, 2053983u };
    REQUIRE( mbf_table_unpack( 6, words, 2, &t ) == MBF_OK );
    std::uint32_t out[2] = {};
    std::size_t written = 0;
    CHECK( mbf_table_pack( t, out, 2, &written ) == MBF_OK );
    CHECK( written == 2 );
    CHECK( out[1] == 2053983u );
    mbf_table_free( t );

    const std::uint32_t terms[] = { 0b010, 0b100 };
    REQUIRE( mbf_table_from_terms( 3, terms, 2, &t ) == MBF_OK );
    CHECK( mbf_table_to_string( t, buffer, sizeof buffer, nullptr ) == MBF_OK );
    CHECK( std::string( buffer ) == "11111100" );
    mbf_table_free( t );

    CHECK( mbf_table_from_string( "01000000", &t ) == MBF_OK );
    CHECK( mbf_table_is_monotone( t ) == 0 );
    CHECK( mbf_table_canonical( t, nullptr, nullptr, nullptr ) == MBF_NOT_MONOTONE );
    mbf_table_free( t );
  }

  TEST_CASE( "estimates" )
  {
    std::uint64_t bound = 0;
    CHECK( mbf_lower_bound( 7, &bound ) == MBF_OK );
    CHECK( bound >= 479103580u );
    CHECK( mbf_lower_bound( 9, &bound ) == MBF_OUT_OF_RANGE );
    double log2 = 0;
    CHECK( mbf_korshunov_log2( 8, &log2 ) == MBF_OK );
    CHECK( log2 > 70 );
    CHECK( mbf_korshunov_log2( 1, &log2 ) == MBF_OUT_OF_RANGE );
    std::size_t needed = 0;
    CHECK( mbf_known_dedekind( 8, nullptr, 0, &needed ) == MBF_BUFFER_TOO_SMALL );
    CHECK( needed == 24 );
  }
}
