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

#include <mbfkit/bounds.hpp>

using namespace mbf;

TEST_SUITE( "bounds" )
{
  TEST_CASE( "naive lower bound" )
  {
    CHECK( lower_bound_r( 7, big_uint( "2414682040998" ) ) >= 479103580u );
    CHECK( lower_bound_r( 7, big_uint( "2414682040998" ) ) < 490013148u );
    CHECK( lower_bound_r( 2, 6 ) == 3 );
    CHECK( lower_bound_r( 1, 3 ) == 3 );
    for ( int n = 0; n <= 7; ++n )
    {
      CHECK( lower_bound_r( n, *known_dedekind( n ) ) <= *known_inequivalent( n ) );
    }
  }

  TEST_CASE( "refined lower bound stays below the true value" )
  {
    for ( int n = 0; n <= 6; ++n )
    {
      const auto refined = refined_lower_bound_r( n, *known_dedekind( n ) );
      CHECK( refined >= lower_bound_r( n, *known_dedekind( n ) ) );
      CHECK( refined <= *known_inequivalent( n ) );
    }
    // With every class included the bound is exact.
    refined_bound_rule everything;
    everything.all_up_to_terms = 10;
    everything.max_terms = 10;
    CHECK( refined_lower_bound_r( 4, *known_dedekind( 4 ), everything ) == 30 );
  }

  TEST_CASE( "few-term classes" )
  {
    // Classes with at most one term: zero and the n + 1 single-term classes.
    CHECK( classes_with_few_terms( 5, 1 ).size() == 6 );
    const auto two = classes_with_few_terms( 4, 10 );
    CHECK( two.size() == 29 );
  }

  TEST_CASE( "asymptotic estimate" )
  {
    for ( int n : { 7, 8 } )
    {
      const high_precision ratio = korshunov_estimate( n ) / high_precision( *known_dedekind( n ) );
      CHECK( ratio > 0.1 );
      CHECK( ratio < 10 );
    }
    high_precision previous = 10;
    for ( int n : { 6, 8, 10, 12 } )
    {
      const high_precision ratio = korshunov_log2( n ) / high_precision( binomial( n, n / 2 ) );
      CHECK( ratio > 1 );
      CHECK( ratio < previous );
      previous = ratio;
    }
    CHECK_THROWS_AS( korshunov_estimate( 1 ), error );
  }
}
