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
#include <mbfkit/symmetry.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace mbf;

namespace
{

truth_table terms( int n, std::initializer_list<std::initializer_list<int>> lists )
{
  return from_minimal_terms( minimal_term_set::from_lists( n, lists ) );
}

variable_permutation random_permutation( int n, std::mt19937_64& rng )
{
  std::vector<int> images( static_cast<std::size_t>( n ) );
  std::iota( images.begin(), images.end(), 1 );
  std::shuffle( images.begin(), images.end(), rng );
  return variable_permutation::from_images( images );
}

truth_table random_table( int n, std::mt19937_64& rng )
{
  std::uniform_int_distribution<subset_mask> pick( 0, ( subset_mask( 1 ) << n ) - 1 );
  std::vector<subset_mask> seeds( 4 );
  for ( auto& s : seeds )
  {
    s = pick( rng );
  }
  return truth_table::from_function( n, [&]( subset_mask m ) {
    return std::any_of( seeds.begin(), seeds.end(), [m]( subset_mask s ) { return ( s & m ) == s; } );
  } );
}

} // namespace

TEST_SUITE( "symmetry" )
{
  TEST_CASE( "permutations" )
  {
    const auto p = variable_permutation::from_images( { 2, 3, 1 } );
    CHECK( p( 1 ) == 2 );
    CHECK( p.inverse()( 2 ) == 1 );
    CHECK( p.compose( p.inverse() ) == variable_permutation::identity( 3 ) );
    CHECK( p.apply( 0b001 ) == 0b010 );
    CHECK_THROWS_AS( variable_permutation::from_images( { 1, 1, 2 } ), error );
  }

  TEST_CASE( "renaming a function" )
  {
    const auto f = terms( 3, { { 1, 2 }, { 2, 3 } } );
    const auto g = apply_permutation( f, variable_permutation::transposition( 3, 1, 2 ) );
    CHECK( g == terms( 3, { { 1, 2 }, { 1, 3 } } ) );
    CHECK( apply_permutation( f, variable_permutation::identity( 3 ) ) == f );
  }

  TEST_CASE( "renaming and renaming back is the identity" )
  {
    std::mt19937_64 rng( 11 );
    for ( int n = 1; n <= 6; ++n )
    {
      for ( int i = 0; i < 100; ++i )
      {
        const auto t = random_table( n, rng );
        const auto p = random_permutation( n, rng );
        CHECK( apply_permutation( apply_permutation( t, p ), p.inverse() ) == t );
      }
    }
  }

  TEST_CASE( "least representatives" )
  {
    const auto single = canonical_form( terms( 2, { { 2 } } ) );
    CHECK( single.canonical == terms( 2, { { 1 } } ) );
    CHECK( single.orbit_size == 2 );
    for ( int n = 0; n <= 6; ++n )
    {
      const auto zero = canonical_form( truth_table::constant( n, false ) );
      CHECK( zero.canonical == truth_table::constant( n, false ) );
      CHECK( zero.orbit_size == 1 );
      CHECK( zero.automorphism_count == factorial( n ) );
    }
    CHECK_THROWS_AS( canonical_form( truth_table::from_string( "01000000" ) ), error );
  }

  TEST_CASE( "orbit accounting on random tables up to n = 10" )
  {
    std::mt19937_64 rng( 5 );
    for ( int n = 1; n <= 9; ++n )
    {
      for ( int i = 0; i < ( n >= 8 ? 3 : 20 ); ++i )
      {
        const auto t = random_table( n, rng );
        const auto c = canonical_form( t );
        CHECK( c.orbit_size * c.automorphism_count == factorial( n ) );
        CHECK( c.canonical <= t );
        const auto p = random_permutation( n, rng );
        CHECK( canonical_form( apply_permutation( t, p ) ).canonical == c.canonical );
      }
    }
  }

  TEST_CASE( "least representative is the orbit minimum for n <= 4" )
  {
    for ( int n = 0; n <= 4; ++n )
    {
      std::vector<int> images( static_cast<std::size_t>( n ) );
      std::iota( images.begin(), images.end(), 1 );
      for ( const auto& s : oracle::brute_monotone_tables( n ) )
      {
        const auto t = truth_table::from_string( s );
        auto best = t;
        std::uint64_t fixed = 0;
        auto perm = images;
        do
        {
          const auto g = apply_permutation( t, variable_permutation::from_images( perm ) );
          best = std::min( best, g );
          fixed += ( g == t );
        } while ( std::next_permutation( perm.begin(), perm.end() ) );
        const auto c = canonical_form( t );
        CHECK( c.canonical == best );
        CHECK( c.automorphism_count == fixed );
      }
    }
  }

  TEST_CASE( "class counts through least representatives" )
  {
    const std::size_t expected[] = { 2, 3, 5, 10, 30 };
    for ( int n = 0; n <= 4; ++n )
    {
      std::set<std::string> reps;
      for ( const auto& s : oracle::brute_monotone_tables( n ) )
      {
        reps.insert( canonical_form( truth_table::from_string( s ) ).canonical.to_string() );
      }
      CHECK( reps.size() == expected[n] );
    }
  }

  TEST_CASE( "asymmetric classes" )
  {
    for ( int n = 0; n <= 5; ++n )
    {
      CHECK_FALSE( is_asymmetric( truth_table::constant( n, false ) ) );
      CHECK_FALSE( is_asymmetric( truth_table::constant( n, true ) ) );
    }
    const std::size_t expected[] = { 0, 0, 1, 0, 0, 7 };
    for ( int n = 0; n <= 5; ++n )
    {
      std::size_t count = 0;
      for ( const auto& orbit : oracle::brute_classes( n ) )
      {
        count += is_asymmetric( truth_table::from_string( orbit.front() ) );
      }
      CHECK( count == expected[n] );
    }
  }
}
