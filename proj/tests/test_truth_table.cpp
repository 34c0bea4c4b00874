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
#include <mbfkit/truth_table.hpp>

#include <random>

using namespace mbf;

namespace
{

// Worked 64-bit example: two packed words and the minimal terms they encode.
const std::string example_bits = "11111110111111101111110010000000"
                                 "11111010111010101111100000000000";

truth_table random_monotone( int n, std::mt19937_64& rng )
{
  std::vector<subset_mask> candidates;
  std::uniform_int_distribution<subset_mask> pick( 0, ( subset_mask( 1 ) << n ) - 1 );
  std::uniform_int_distribution<int> count( 0, 5 );
  const int k = count( rng );
  for ( int i = 0; i < k; ++i )
  {
    candidates.push_back( pick( rng ) );
  }
  return truth_table::from_function( n, [&]( subset_mask m ) {
    return std::any_of( candidates.begin(), candidates.end(), [m]( subset_mask s ) { return ( s & m ) == s; } );
  } );
}

} // namespace

TEST_SUITE( "truth_table" )
{
  TEST_CASE( "positions follow reverse colex order of the inputs" )
  {
    const auto inputs = oracle::reverse_colex_inputs( 3 );
    for ( std::uint32_t j = 0; j < 8; ++j )
    {
      const auto mask = truth_table::position_to_input( 3, j );
      for ( int v = 0; v < 3; ++v )
      {
        CHECK( ( ( mask >> v ) & 1 ) == static_cast<unsigned>( inputs[j][v] ) );
      }
    }
    // {1,2,3}, {2,3}, {1,3}, {3}, {1,2}, {2}, {1}, {}
    const subset_mask expected[] = { 7, 6, 5, 4, 3, 2, 1, 0 };
    for ( std::uint32_t j = 0; j < 8; ++j )
    {
      CHECK( truth_table::position_to_input( 3, j ) == expected[j] );
    }
  }

  TEST_CASE( "string round trip and sizes" )
  {
    CHECK( truth_table::from_string( "11101010" ).to_string() == "11101010" );
    CHECK( truth_table::from_string( "1" ).num_vars() == 0 );
    CHECK( truth_table::from_string( example_bits ).num_vars() == 6 );
    CHECK_THROWS_AS( truth_table::from_string( "101" ), error );
    CHECK_THROWS_AS( truth_table::from_string( "10x0" ), error );
  }

  TEST_CASE( "monotonicity" )
  {
    CHECK( is_monotone( truth_table::constant( 3, true ) ) );
    CHECK( is_monotone( truth_table::constant( 3, false ) ) );
    CHECK( is_monotone( truth_table::from_string( "11101010" ) ) );
    CHECK_FALSE( is_monotone( truth_table::from_string( "01000000" ) ) );
  }

  TEST_CASE( "minimal terms" )
  {
    CHECK( to_minimal_terms( truth_table::from_string( "11101010" ) ).to_string() == "{{1},{2,3}}" );
    CHECK( to_minimal_terms( truth_table::constant( 4, false ) ).size() == 0 );
    CHECK( to_minimal_terms( truth_table::constant( 2, true ) ).is_constant_one() );
    CHECK( to_minimal_terms( truth_table::from_string( example_bits ) ).to_string() ==
           "{{1,2,4},{3,4},{1,5},{2,3,5},{1,2,3,6},{2,4,6},{2,5,6},{3,5,6}}" );
    CHECK_THROWS_AS( to_minimal_terms( truth_table::from_string( "01000000" ) ), error );
  }

  TEST_CASE( "from minimal terms" )
  {
    CHECK( from_minimal_terms( minimal_term_set::from_lists( 3, { { 1 }, { 2, 3 } } ) ).to_string() == "11101010" );
    CHECK( from_minimal_terms( minimal_term_set( 2, {} ) ).to_string() == "0000" );
    CHECK_THROWS_AS( minimal_term_set::from_lists( 3, { { 1 }, { 1, 2 } } ), error );
  }

  TEST_CASE( "minimal terms round trip over every monotone table with n <= 4" )
  {
    for ( int n = 0; n <= 4; ++n )
    {
      const auto tables = oracle::brute_monotone_tables( n );
      for ( const auto& s : tables )
      {
        const auto t = truth_table::from_string( s );
        CHECK( from_minimal_terms( to_minimal_terms( t ) ) == t );
      }
    }
  }

  TEST_CASE( "packing the worked example" )
  {
    const auto t = truth_table::from_string( example_bits );
    const auto words = pack( t );
    REQUIRE( words.size() == 2 );
    CHECK( words[0] == 20938623u );
    CHECK( words[1] == 2053983u );
    const std::uint32_t input[] = { 20938623u, 2053983u };
    CHECK( unpack( input, 6 ) == t );
  }

  TEST_CASE( "packing small and constant tables" )
  {
    for ( int n = 0; n <= 8; ++n )
    {
      const auto words = pack( truth_table::constant( n, false ) );
      CHECK( words.size() == packed_word_count( n ) );
      CHECK( std::all_of( words.begin(), words.end(), []( std::uint32_t w ) { return w == 0; } ) );
    }
    const std::uint32_t zero[] = { 0 };
    CHECK( unpack( zero, 2 ).to_string() == "0000" );
    // n < 5 pads on the right with zeros.
    CHECK( pack( truth_table::from_string( "1110" ) ) == std::vector<std::uint32_t>{ 7u } );
    const std::uint32_t padded[] = { 7u | ( 1u << 20 ) };
    CHECK_THROWS_AS( unpack( padded, 2 ), error );
    const std::uint32_t too_many[] = { 0, 0, 0 };
    CHECK_THROWS_AS( unpack( too_many, 6 ), error );
  }

  TEST_CASE( "pack and unpack round trip on sampled tables" )
  {
    std::mt19937_64 rng( 7 );
    for ( int n = 3; n <= 6; ++n )
    {
      for ( int i = 0; i < 200; ++i )
      {
        const auto t = random_monotone( n, rng );
        CHECK( unpack( pack( t ), n ) == t );
      }
    }
  }

  TEST_CASE( "ordering agrees with the position strings" )
  {
    const auto tables = oracle::brute_monotone_tables( 3 );
    for ( const auto& a : tables )
    {
      for ( const auto& b : tables )
      {
        CHECK( ( truth_table::from_string( a ) < truth_table::from_string( b ) ) == ( a < b ) );
      }
    }
  }
}
