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

#include <mbfkit/oracle.hpp>
#include <mbfkit/profile.hpp>

#include <set>

using namespace mbf;

TEST_SUITE( "profile" )
{
  TEST_CASE( "parse and print" )
  {
    CHECK( profile::parse( "(0,2,2,0,0)" ) == profile{ 0, 2, 2, 0, 0 } );
    CHECK( profile::parse( " ( 1, 0 ) " ).to_string() == "(1,0)" );
    CHECK( profile::parse( "()" ).num_vars() == 0 );
    CHECK_THROWS_AS( profile::parse( "(1,2" ), error );
    CHECK_THROWS_AS( profile::parse( "(1,-2)" ), error );
  }

  TEST_CASE( "profile of a term set" )
  {
    CHECK( profile_of( minimal_term_set::from_lists( 3, { { 2 }, { 3 } } ) ) == profile{ 2, 0, 0 } );
    CHECK( profile_of( minimal_term_set::from_lists( 3, { { 1, 2 }, { 3 } } ) ) == profile{ 1, 1, 0 } );
    CHECK( profile_of( minimal_term_set( 5, {} ) ) == profile( 5 ) );
    CHECK_THROWS_AS( profile_of( minimal_term_set::from_lists( 2, { {} } ) ), error );
  }

  TEST_CASE( "complement" )
  {
    CHECK( complement_profile( profile{ 0, 0, 3, 0, 0, 0, 0 } ) == profile{ 0, 0, 32, 0, 0, 0, 0 } );
    CHECK( complement_profile( profile{ 0, 10, 0, 0, 0 } ) == profile( 5 ) );
    CHECK_THROWS_AS( complement_profile( profile{ 1, 1, 0 } ), error );
    CHECK_THROWS_AS( complement_profile( profile( 3 ) ), error );
  }

  TEST_CASE( "reverse dual" )
  {
    CHECK( reverse_dual_profile( profile{ 0, 1, 3, 0, 0 } ) == profile{ 0, 3, 1, 0, 0 } );
    CHECK( reverse_dual_profile( profile{ 0, 2, 2, 0, 0 } ) == profile{ 0, 2, 2, 0, 0 } );
    CHECK( reverse_dual_profile( profile{ 1, 1, 1, 0, 0 } ) == profile{ 0, 1, 1, 1, 0 } );
    CHECK( reverse_dual_profile( profile{ 1 } ) == profile{ 1 } );
  }

  TEST_CASE( "strip singleton" )
  {
    CHECK( strip_singleton( profile{ 1, 2, 0, 0, 0 } ) == profile{ 0, 2, 0, 0 } );
    CHECK( strip_singleton( profile{ 2, 0, 0, 0, 0 } ) == profile{ 1, 0, 0, 0 } );
    CHECK_THROWS_AS( strip_singleton( profile{ 0, 2, 0, 0, 0 } ), error );
  }

  TEST_CASE( "generated profile counts" )
  {
    const std::size_t expected[] = { 1, 2, 4, 9, 25, 95, 552, 5460, 100708 };
    for ( int n = 0; n <= 8; ++n )
    {
      CHECK( generate_profiles( n ).size() == expected[n] );
    }
  }

  TEST_CASE( "generated profiles are sorted, distinct and bounded" )
  {
    for ( int n = 0; n <= 7; ++n )
    {
      const auto profiles = generate_profiles( n );
      CHECK( std::is_sorted( profiles.begin(), profiles.end() ) );
      CHECK( std::adjacent_find( profiles.begin(), profiles.end() ) == profiles.end() );
      for ( const auto& p : profiles )
      {
        CHECK( static_cast<std::uint64_t>( p.total() ) <= binomial( n, n / 2 ) );
        for ( int i = 0; i < n; ++i )
        {
          CHECK( static_cast<std::uint64_t>( p[i] ) <= binomial( n, i + 1 ) );
        }
        if ( n >= 2 && p[0] > 0 )
        {
          CHECK( p[n - 1] == 0 );
        }
      }
    }
  }

  TEST_CASE( "generated profiles equal the realized ones" )
  {
    for ( int n = 0; n <= 5; ++n )
    {
      std::set<std::vector<int>> realized;
      for ( const auto& [entries, counts] : oracle::brute_profile_census( n ) )
      {
        realized.insert( entries );
      }
      std::set<std::vector<int>> generated;
      for ( const auto& p : generate_profiles( n ) )
      {
        std::vector<int> entries;
        for ( int i = 0; i < n; ++i )
        {
          entries.push_back( p[i] );
        }
        generated.insert( entries );
      }
      CHECK( generated == realized );
    }
  }

  TEST_CASE( "shadow bound values" )
  {
    CHECK( shadow_bound( 5, 1, 3 ) == 1 );
    CHECK( shadow_bound( 5, 3, 10 ) == 10 );
    CHECK( shadow_bound( 4, 2, 6 ) == 4 );
    for ( int r = 1; r <= 5; ++r )
    {
      CHECK( shadow_bound( 5, r, 0 ) == 0 );
    }
    const std::uint64_t level3[] = { 0, 3, 5, 6, 6, 8, 9, 9, 10, 10, 10 };
    for ( std::uint64_t x = 0; x <= 10; ++x )
    {
      CHECK( shadow_bound( 5, 3, x ) == level3[x] );
    }
    CHECK_THROWS_AS( shadow_bound( 5, 0, 1 ), error );
    CHECK_THROWS_AS( shadow_bound( 5, 3, 11 ), error );
  }

  TEST_CASE( "shadow bound is nondecreasing and matches exhaustive search" )
  {
    for ( int n = 1; n <= 5; ++n )
    {
      for ( int r = 1; r <= n; ++r )
      {
        std::uint64_t previous = 0;
        for ( std::uint64_t x = 0; x <= binomial( n, r ); ++x )
        {
          const auto k = shadow_bound( n, r, x );
          CHECK( k >= previous );
          if ( r == 1 && x > 0 )
          {
            CHECK( k == 1 );
          }
          CHECK( k == oracle::brute_min_shadow( n, r, x ) );
          previous = k;
        }
      }
    }
  }

  TEST_CASE( "feasibility" )
  {
    CHECK( profile_feasible( profile{ 0, 0, 0, 0, 1 } ) );
    CHECK_FALSE( profile_feasible( profile{ 2, 0, 0, 0, 1 } ) );
    CHECK_FALSE( profile_feasible( profile{ 0, 11, 0, 0, 0 } ) );
    CHECK( profile_feasible( profile{ 0, 0, 7, 7, 0, 0, 0 } ) );
  }
}
