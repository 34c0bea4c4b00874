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

#include "mbfkit/store.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iterator>
#include <sstream>

namespace mbf
{

namespace
{

constexpr std::string_view kMagic = "mbfkit-profile-list";

void put_u32( std::string& out, std::uint32_t v )
{
  for ( int i = 0; i < 4; ++i )
  {
    out.push_back( static_cast<char>( ( v >> ( 8 * i ) ) & 0xffu ) );
  }
}

std::uint32_t get_u32( const char* p )
{
  std::uint32_t v = 0;
  for ( int i = 0; i < 4; ++i )
  {
    v |= static_cast<std::uint32_t>( static_cast<unsigned char>( p[i] ) ) << ( 8 * i );
  }
  return v;
}

std::string read_file( const std::filesystem::path& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw error( error_code::io, "cannot open " + path.string() );
  }
  return std::string( std::istreambuf_iterator<char>( in ), std::istreambuf_iterator<char>() );
}

void write_atomically( const std::filesystem::path& path, const std::string& contents )
{
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out( tmp, std::ios::binary | std::ios::trunc );
    if ( !out )
    {
      throw error( error_code::io, "cannot write " + tmp.string() );
    }
    out.write( contents.data(), static_cast<std::streamsize>( contents.size() ) );
    out.flush();
    if ( !out )
    {
      throw error( error_code::io, "write failed for " + tmp.string() );
    }
  }
  std::error_code ec;
  std::filesystem::rename( tmp, path, ec );
  if ( ec )
  {
    throw error( error_code::io, "cannot rename " + tmp.string() + ": " + ec.message() );
  }
}

// Reads "key value" from the next header line.
std::string header_field( std::istringstream& header, std::string_view key )
{
  std::string line;
  if ( !std::getline( header, line ) )
  {
    throw error( error_code::format, "profile file header ends before '" + std::string( key ) + "'" );
  }
  if ( line.size() <= key.size() || line.compare( 0, key.size(), key ) != 0 || line[key.size()] != ' ' )
  {
    throw error( error_code::format, "expected header field '" + std::string( key ) + "', got '" + line + "'" );
  }
  return line.substr( key.size() + 1 );
}

std::uint64_t parse_unsigned( const std::string& text, std::string_view what )
{
  try
  {
    std::size_t used = 0;
    const auto v = std::stoull( text, &used );
    if ( used != text.size() )
    {
      throw std::invalid_argument( "trailing characters" );
    }
    return v;
  }
  catch ( const std::exception& )
  {
    throw error( error_code::format, "bad " + std::string( what ) + " value '" + text + "'" );
  }
}

std::string current_timestamp()
{
  const auto now = std::chrono::system_clock::to_time_t( std::chrono::system_clock::now() );
  std::tm tm{};
  gmtime_r( &now, &tm );
  char buf[32];
  std::strftime( buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm );
  return buf;
}

std::vector<std::string> split_csv( const std::string& line )
{
  std::vector<std::string> fields( 1 );
  bool quoted = false;
  for ( char c : line )
  {
    if ( c == '"' )
    {
      quoted = !quoted;
    }
    else if ( c == ',' && !quoted )
    {
      fields.emplace_back();
    }
    else
    {
      fields.back().push_back( c );
    }
  }
  return fields;
}

} // namespace

std::string profile_file_name( const profile& p )
{
  std::string name = "p_";
  for ( int i = 0; i < p.num_vars(); ++i )
  {
    if ( i != 0 )
    {
      name += '-';
    }
    name += std::to_string( p[i] );
  }
  return name + ".mbf";
}

void save_profile_list( const profile_class_list& list, const std::filesystem::path& path )
{
  const int n = list.num_vars();
  const auto words = packed_word_count( n );
  std::ostringstream header;
  header << kMagic << '\n'
         << "version " << kProfileFileVersion << '\n'
         << "n " << n << '\n'
         << "profile " << list.profile_vector().to_string() << '\n'
         << "classes " << list.r_count() << '\n'
         << "words " << words << '\n'
         << "end\n";
  std::string contents = header.str();
  contents.reserve( contents.size() + list.entries().size() * ( words + 1u ) * 4u );
  for ( std::size_t i = 0; i < list.entries().size(); ++i )
  {
    for ( auto w : pack( list.table( i ) ) )
    {
      put_u32( contents, w );
    }
    put_u32( contents, list.entries()[i].orbit_size );
  }
  write_atomically( path, contents );
}

profile_class_list load_profile_list( const std::filesystem::path& path, std::optional<int> expected_num_vars )
{
  const auto contents = read_file( path );
  const auto header_end = contents.find( "\nend\n" );
  if ( contents.compare( 0, kMagic.size(), kMagic ) != 0 || header_end == std::string::npos )
  {
    throw error( error_code::format, path.string() + " is not an mbfkit profile file" );
  }
  std::istringstream header( contents.substr( 0, header_end + 1 ) );
  std::string magic;
  std::getline( header, magic );
  if ( magic != kMagic )
  {
    throw error( error_code::format, path.string() + " is not an mbfkit profile file" );
  }
  const auto version = parse_unsigned( header_field( header, "version" ), "version" );
  if ( version != static_cast<std::uint64_t>( kProfileFileVersion ) )
  {
    throw error( error_code::version_mismatch, path.string() + " has format version " + std::to_string( version ) + ", expected " + std::to_string( kProfileFileVersion ) );
  }
  const auto n = static_cast<int>( parse_unsigned( header_field( header, "n" ), "n" ) );
  if ( expected_num_vars && n != *expected_num_vars )
  {
    throw error( error_code::dimension_mismatch, path.string() + " holds functions of " + std::to_string( n ) + " variables, expected " + std::to_string( *expected_num_vars ) );
  }
  if ( n > kMaxEnumVars )
  {
    throw error( error_code::format, "variable count " + std::to_string( n ) + " out of range" );
  }
  profile target;
  try
  {
    target = profile::parse( header_field( header, "profile" ) );
  }
  catch ( const error& e )
  {
    throw error( error_code::format, e.what() );
  }
  if ( target.num_vars() != n )
  {
    throw error( error_code::format, "header profile length differs from n" );
  }
  const auto classes = parse_unsigned( header_field( header, "classes" ), "classes" );
  const auto words = parse_unsigned( header_field( header, "words" ), "words" );
  if ( words != packed_word_count( n ) )
  {
    throw error( error_code::format, "word count does not match n" );
  }

  const std::size_t body_offset = header_end + 5;
  const std::size_t record_bytes = ( words + 1u ) * 4u;
  const std::size_t body_size = contents.size() - body_offset;
  if ( body_size != classes * record_bytes )
  {
    throw error( error_code::validation, path.string() + ": body holds " + std::to_string( body_size ) + " bytes, header promises " + std::to_string( classes ) + " records of " + std::to_string( record_bytes ) + " bytes" );
  }

  const auto group = factorial( n );
  std::vector<class_entry> entries;
  entries.reserve( classes );
  std::vector<std::uint32_t> packed( words );
  for ( std::size_t i = 0; i < classes; ++i )
  {
    const char* record = contents.data() + body_offset + i * record_bytes;
    for ( std::size_t w = 0; w < words; ++w )
    {
      packed[w] = get_u32( record + 4 * w );
    }
    const auto orbit = get_u32( record + 4 * words );
    auto reject = [&]( const std::string& why ) {
      return error( error_code::validation, path.string() + ": record " + std::to_string( i ) + " " + why );
    };
    truth_table t;
    try
    {
      t = unpack( packed, n );
    }
    catch ( const error& )
    {
      throw reject( "has nonzero padding" );
    }
    if ( !is_monotone( t ) )
    {
      throw reject( "is not monotone" );
    }
    const auto terms = to_minimal_terms( t );
    if ( terms.is_constant_one() || profile_of( terms ) != target )
    {
      throw reject( "does not have profile " + target.to_string() );
    }
    const auto canon = canonical_form( t );
    if ( canon.canonical != t )
    {
      throw reject( "is not a least representative" );
    }
    if ( orbit == 0u || orbit != canon.orbit_size || group % orbit != 0u )
    {
      throw reject( "has a wrong orbit size" );
    }
    entries.push_back( { to_block( t ), orbit } );
  }
  try
  {
    return profile_class_list( target, std::move( entries ) );
  }
  catch ( const error& e )
  {
    throw error( error_code::validation, path.string() + ": " + e.what() );
  }
}

results_db::results_db( std::filesystem::path path )
    : path_( std::move( path ) )
{
  if ( !std::filesystem::exists( path_ ) )
  {
    std::ofstream out( path_ );
    if ( !out )
    {
      throw error( error_code::io, "cannot create " + path_.string() );
    }
    out << "n,profile,R_count,D_count,elapsed_seconds,timestamp\n";
    return;
  }
  std::ifstream in( path_ );
  if ( !in )
  {
    throw error( error_code::io, "cannot open " + path_.string() );
  }
  std::string line;
  std::getline( in, line );
  for ( std::size_t lineno = 2; std::getline( in, line ); ++lineno )
  {
    if ( line.empty() )
    {
      continue;
    }
    const auto fields = split_csv( line );
    if ( fields.size() != 6u )
    {
      throw error( error_code::format, path_.string() + ":" + std::to_string( lineno ) + ": expected 6 fields" );
    }
    row r;
    r.num_vars = static_cast<int>( parse_unsigned( fields[0], "n" ) );
    r.vector = profile::parse( fields[1] );
    r.r_count = parse_unsigned( fields[2], "R_count" );
    r.d_count = parse_unsigned( fields[3], "D_count" );
    r.elapsed_seconds = std::stod( fields[4] );
    r.timestamp = fields[5];
    rows_.push_back( std::move( r ) );
  }
}

bool results_db::record( int num_vars, const profile& p, std::uint64_t r_count, std::uint64_t d_count, double elapsed_seconds )
{
  std::lock_guard lock( mutex_ );
  for ( const auto& r : rows_ )
  {
    if ( r.num_vars == num_vars && r.vector == p )
    {
      if ( r.r_count != r_count || r.d_count != d_count )
      {
        throw error( error_code::result_mismatch, "n=" + std::to_string( num_vars ) + " " + p.to_string() + ": stored R=" + std::to_string( r.r_count ) + " D=" + std::to_string( r.d_count ) + ", new R=" + std::to_string( r_count ) + " D=" + std::to_string( d_count ) );
      }
      return false;
    }
  }
  row r{ num_vars, p, r_count, d_count, elapsed_seconds, current_timestamp() };
  std::ofstream out( path_, std::ios::app );
  if ( !out )
  {
    throw error( error_code::io, "cannot append to " + path_.string() );
  }
  char elapsed[32];
  std::snprintf( elapsed, sizeof elapsed, "%.6f", elapsed_seconds );
  out << num_vars << ",\"" << p.to_string() << "\"," << r_count << ',' << d_count << ',' << elapsed << ',' << r.timestamp << '\n';
  out.flush();
  if ( !out )
  {
    throw error( error_code::io, "append failed for " + path_.string() );
  }
  rows_.push_back( std::move( r ) );
  return true;
}

std::optional<results_db::row> results_db::find( int num_vars, const profile& p ) const
{
  std::lock_guard lock( mutex_ );
  for ( const auto& r : rows_ )
  {
    if ( r.num_vars == num_vars && r.vector == p )
    {
      return r;
    }
  }
  return std::nullopt;
}

std::vector<results_db::row> results_db::rows() const
{
  std::lock_guard lock( mutex_ );
  return rows_;
}

results_db::totals results_db::totals_for( int num_vars ) const
{
  std::lock_guard lock( mutex_ );
  totals t;
  for ( const auto& r : rows_ )
  {
    if ( r.num_vars == num_vars )
    {
      ++t.rows;
      t.r_sum += r.r_count;
      t.d_sum += r.d_count;
    }
  }
  return t;
}

} // namespace mbf
