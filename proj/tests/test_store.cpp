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

#include <mbfkit/store.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace mbf;
namespace fs = std::filesystem;

namespace
{

struct scratch_dir
{
  fs::path path;

  scratch_dir()
  {
    std::random_device rd;
    path = fs::temp_directory_path() / ( "mbfkit-test-" + std::to_string( rd() ) );
    fs::create_directories( path );
  }
  ~scratch_dir() { fs::remove_all( path ); }
};

std::string read_all( const fs::path& p )
{
  std::ifstream is( p, std::ios::binary );
  return { std::istreambuf_iterator<char>( is ), {} };
}

void write_all( const fs::path& p, const std::string& text )
{
  std::ofstream os( p, std::ios::binary | std::ios::trunc );
  os << text;
}

} // namespace

TEST_SUITE( "store" )
{
  TEST_CASE( "round trip" )
  {
    scratch_dir dir;
    const auto list = enumerate_profile( profile{ 0, 2, 2, 0, 0 } );
    REQUIRE( list.r_count() == 7 );
    const auto path = dir.path / profile_file_name( list.profile_vector() );
    CHECK( path.filename() == "p_0-2-2-0-0.mbf" );
    save_profile_list( list, path );
    CHECK( load_profile_list( path, 5 ) == list );

    const auto seven = enumerate_profile( profile{ 0, 0, 2, 1, 0, 0, 0 } );
    save_profile_list( seven, dir.path / "seven.mbf" );
    CHECK( load_profile_list( dir.path / "seven.mbf" ) == seven );
  }

  TEST_CASE( "empty list" )
  {
    scratch_dir dir;
    const profile_class_list empty( profile{ 0, 0, 0 }, {} );
    save_profile_list( empty, dir.path / "empty.mbf" );
    CHECK( load_profile_list( dir.path / "empty.mbf" ).r_count() == 0 );
  }

  TEST_CASE( "corruption is rejected" )
  {
    scratch_dir dir;
    const auto list = enumerate_profile( profile{ 0, 2, 2, 0, 0 } );
    const auto good = dir.path / "good.mbf";
    save_profile_list( list, good );
    const auto bytes = read_all( good );
    const auto bad = dir.path / "bad.mbf";

    auto expect = [&]( const std::string& content, error_code code, std::optional<int> n = std::nullopt ) {
      write_all( bad, content );
      try
      {
        load_profile_list( bad, n );
        FAIL( "load accepted a bad file" );
      }
      catch ( const error& e )
      {
        CHECK( e.code() == code );
      }
    };

    expect( bytes.substr( 0, bytes.size() - 3 ), error_code::validation );
    expect( "something else\n", error_code::format );
    auto versioned = bytes;
    versioned.replace( versioned.find( "version 1" ), 9, "version 9" );
    expect( versioned, error_code::version_mismatch );
    expect( bytes, error_code::dimension_mismatch, 6 );

    // Same class count, different header profile: records disagree with it.
    auto relabeled = bytes;
    relabeled.replace( relabeled.find( "(0,2,2,0,0)" ), 11, "(0,3,1,0,0)" );
    expect( relabeled, error_code::validation );

    // Flip a table bit so the record is no longer a least representative or not monotone.
    auto flipped = bytes;
    const auto body = flipped.find( "end\n" ) + 4;
    flipped[body] = static_cast<char>( flipped[body] ^ 0x01 );
    expect( flipped, error_code::validation );

    try
    {
      load_profile_list( dir.path / "missing.mbf" );
      FAIL( "missing file accepted" );
    }
    catch ( const error& e )
    {
      CHECK( e.code() == error_code::io );
    }
  }

  TEST_CASE( "results database" )
  {
    scratch_dir dir;
    const auto db_path = dir.path / "results.csv";
    const profile p{ 0, 0, 3, 4, 0, 0, 0 };
    {
      results_db db( db_path );
      CHECK( db.record( 7, p, 10, 100, 1.5 ) );
      CHECK_FALSE( db.record( 7, p, 10, 100, 2.5 ) );
      try
      {
        db.record( 7, p, 11, 100, 1.0 );
        FAIL( "conflicting row accepted" );
      }
      catch ( const error& e )
      {
        CHECK( e.code() == error_code::result_mismatch );
      }
    }
    results_db reopened( db_path );
    REQUIRE( reopened.find( 7, p ) );
    CHECK( reopened.find( 7, p )->r_count == 10 );
    CHECK( reopened.rows().size() == 1 );
    CHECK( read_all( db_path ).rfind( "n,profile,R_count,D_count,elapsed_seconds,timestamp\n", 0 ) == 0 );
  }

  TEST_CASE( "results database after a full n = 5 run" )
  {
    scratch_dir dir;
    count_options options;
    options.checkpoint_dir = dir.path;
    const auto report = count_all( 5, options );
    results_db db( dir.path / "n5" / "results.csv" );
    const auto totals = db.totals_for( 5 );
    CHECK( totals.rows == 95 );
    CHECK( totals.r_sum == 209 );
    CHECK( totals.d_sum == 7580 );
    CHECK( report.r_total == 210 );
  }

  TEST_CASE( "resumed run equals an uninterrupted run" )
  {
    scratch_dir dir;
    count_options plain;
    plain.use_shortcuts = false;
    const auto expected = count_all( 5, plain );
    std::ostringstream expected_csv;
    expected.write_csv( expected_csv, false );

    count_options options = plain;
    options.checkpoint_dir = dir.path;
    for ( std::size_t stop : { 3u, 17u, 40u } )
    {
      options.stop_after = stop;
      try
      {
        count_all( 5, options );
      }
      catch ( const error& e )
      {
        CHECK( e.code() == error_code::interrupted );
      }
    }
    options.stop_after.reset();
    const auto resumed = count_all( 5, options );
    std::ostringstream resumed_csv;
    resumed.write_csv( resumed_csv, false );
    CHECK( resumed_csv.str() == expected_csv.str() );
  }
}
