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

#include "mbfkit/mbfkit.h"

#include "mbfkit/bounds.hpp"
#include "mbfkit/enumerate.hpp"
#include "mbfkit/verify.hpp"

#include <cstring>
#include <fstream>
#include <iostream>
#include <new>
#include <string>

struct mbf_profiles
{
  std::vector<mbf::profile> items;
};

struct mbf_report
{
  mbf::counts_report value;
};

struct mbf_table
{
  mbf::truth_table value;
};

struct mbf_verify_result
{
  mbf::verify_report value;
};

namespace
{

thread_local std::string last_error;

mbf_status fail( mbf_status status, std::string message )
{
  last_error = std::move( message );
  return status;
}

mbf_status null_argument()
{
  return fail( MBF_INVALID_ARGUMENT, "null argument" );
}

// Runs `body` and maps exceptions to status codes.
template<class Body>
mbf_status guarded( Body&& body ) noexcept
{
  try
  {
    last_error.clear();
    return body();
  }
  catch ( const mbf::error& e )
  {
    return fail( static_cast<mbf_status>( e.code() ), e.what() );
  }
  catch ( const std::bad_alloc& )
  {
    return fail( MBF_OUT_OF_MEMORY, "out of memory" );
  }
  catch ( const std::out_of_range& e )
  {
    return fail( MBF_OUT_OF_RANGE, e.what() );
  }
  catch ( const std::exception& e )
  {
    return fail( MBF_INTERNAL, e.what() );
  }
  catch ( ... )
  {
    return fail( MBF_INTERNAL, "unknown failure" );
  }
}

mbf_status copy_text( const std::string& text, char* buffer, std::size_t capacity, std::size_t* needed )
{
  if ( needed )
  {
    *needed = text.size() + 1;
  }
  if ( !buffer || capacity < text.size() + 1 )
  {
    return fail( MBF_BUFFER_TOO_SMALL, "buffer too small" );
  }
  std::memcpy( buffer, text.c_str(), text.size() + 1 );
  return MBF_OK;
}

mbf_status new_table( mbf::truth_table t, mbf_table** out )
{
  *out = new mbf_table{ std::move( t ) };
  return MBF_OK;
}

std::string decimal( const mbf::high_precision& x )
{
  using boost::multiprecision::round;
  return static_cast<mbf::big_uint>( round( x ) ).str();
}

} // namespace

extern "C" {

const char* mbf_version( void )
{
  return "1.0.0";
}

const char* mbf_status_string( mbf_status status )
{
  switch ( status )
  {
  case MBF_OK:
    return "ok";
  case MBF_BUFFER_TOO_SMALL:
    return "buffer too small";
  case MBF_OUT_OF_MEMORY:
    return "out of memory";
  default:
    if ( status >= MBF_INVALID_ARGUMENT && status <= MBF_INTERNAL )
    {
      return mbf::to_string( static_cast<mbf::error_code>( status ) );
    }
    return "unknown status";
  }
}

const char* mbf_last_error( void )
{
  return last_error.c_str();
}

mbf_status mbf_profiles_generate( int n, mbf_profiles** out )
{
  if ( !out )
  {
    return null_argument();
  }
  return guarded( [&] {
    *out = new mbf_profiles{ mbf::generate_profiles( n ) };
    return MBF_OK;
  } );
}

size_t mbf_profiles_count( const mbf_profiles* profiles )
{
  return profiles ? profiles->items.size() : 0;
}

mbf_status mbf_profiles_get( const mbf_profiles* profiles, size_t i, char* buffer, size_t capacity, size_t* needed )
{
  if ( !profiles )
  {
    return null_argument();
  }
  if ( i >= profiles->items.size() )
  {
    return fail( MBF_OUT_OF_RANGE, "profile index out of range" );
  }
  return guarded( [&] { return copy_text( profiles->items[i].to_string(), buffer, capacity, needed ); } );
}

mbf_status mbf_profiles_write( const mbf_profiles* profiles, const char* path )
{
  if ( !profiles || !path )
  {
    return null_argument();
  }
  return guarded( [&] {
    std::ofstream os( path );
    for ( const auto& p : profiles->items )
    {
      os << p.to_string() << '\n';
    }
    if ( !os.flush() )
    {
      return fail( MBF_IO, std::string( "cannot write " ) + path );
    }
    return MBF_OK;
  } );
}

void mbf_profiles_free( mbf_profiles* profiles )
{
  delete profiles;
}

void mbf_count_options_init( mbf_count_options* options )
{
  if ( options )
  {
    *options = mbf_count_options{};
    options->use_shortcuts = 1;
  }
}

mbf_status mbf_count_all( int n, const mbf_count_options* options, mbf_report** out )
{
  if ( !out )
  {
    return null_argument();
  }
  mbf_count_options defaults;
  mbf_count_options_init( &defaults );
  const auto& o = options ? *options : defaults;
  return guarded( [&] {
    mbf::count_options opts;
    opts.jobs = o.jobs;
    opts.use_shortcuts = o.use_shortcuts != 0;
    opts.extended = o.extended != 0;
    if ( o.checkpoint_dir )
    {
      opts.checkpoint_dir = std::filesystem::path( o.checkpoint_dir );
    }
    if ( o.stop_after > 0 )
    {
      opts.stop_after = o.stop_after;
    }
    if ( o.log )
    {
      opts.log = [fn = o.log, ctx = o.log_context]( const std::string& message ) { fn( message.c_str(), ctx ); };
    }
    *out = new mbf_report{ mbf::count_all( n, opts ) };
    return MBF_OK;
  } );
}

mbf_status mbf_report_totals( const mbf_report* report, uint64_t* r_total, uint64_t* d_total, uint64_t* asymmetric )
{
  if ( !report )
  {
    return null_argument();
  }
  if ( r_total )
  {
    *r_total = report->value.r_total;
  }
  if ( d_total )
  {
    *d_total = report->value.d_total;
  }
  if ( asymmetric )
  {
    *asymmetric = report->value.asymmetric_total;
  }
  return MBF_OK;
}

mbf_status mbf_report_by_minterms( const mbf_report* report, int k, uint64_t* r_count, uint64_t* d_count )
{
  if ( !report )
  {
    return null_argument();
  }
  const auto it = report->value.by_k.find( k );
  const auto counts = it == report->value.by_k.end() ? std::pair<std::uint64_t, std::uint64_t>{} : it->second;
  if ( r_count )
  {
    *r_count = counts.first;
  }
  if ( d_count )
  {
    *d_count = counts.second;
  }
  return MBF_OK;
}

size_t mbf_report_profile_count( const mbf_report* report )
{
  return report ? report->value.per_profile.size() : 0;
}

mbf_status mbf_report_lookup( const mbf_report* report, const char* profile, uint64_t* r_count, uint64_t* d_count )
{
  if ( !report || !profile )
  {
    return null_argument();
  }
  return guarded( [&] {
    const auto p = mbf::profile::parse( profile );
    const auto* row = report->value.find( p );
    if ( !row )
    {
      return fail( MBF_INFEASIBLE_PROFILE, "profile not in report: " + p.to_string() );
    }
    if ( r_count )
    {
      *r_count = row->r_count;
    }
    if ( d_count )
    {
      *d_count = row->d_count;
    }
    return MBF_OK;
  } );
}

mbf_status mbf_report_write_csv( const mbf_report* report, const char* path, int include_elapsed )
{
  if ( !report )
  {
    return null_argument();
  }
  return guarded( [&] {
    if ( !path )
    {
      report->value.write_csv( std::cout, include_elapsed != 0 );
      std::cout.flush();
      return MBF_OK;
    }
    std::ofstream os( path );
    report->value.write_csv( os, include_elapsed != 0 );
    if ( !os.flush() )
    {
      return fail( MBF_IO, std::string( "cannot write " ) + path );
    }
    return MBF_OK;
  } );
}

mbf_status mbf_report_summary( const mbf_report* report, char* buffer, size_t capacity, size_t* needed )
{
  if ( !report )
  {
    return null_argument();
  }
  return guarded( [&] { return copy_text( report->value.summary(), buffer, capacity, needed ); } );
}

void mbf_report_free( mbf_report* report )
{
  delete report;
}

mbf_status mbf_count_profile( const char* profile, unsigned jobs, uint64_t* r_count, uint64_t* d_count )
{
  if ( !profile )
  {
    return null_argument();
  }
  return guarded( [&] {
    const auto counts = mbf::count_profile( mbf::profile::parse( profile ), jobs );
    if ( r_count )
    {
      *r_count = counts.r_count;
    }
    if ( d_count )
    {
      *d_count = counts.d_count;
    }
    return MBF_OK;
  } );
}

mbf_status mbf_verify( int n, unsigned flags, unsigned jobs, mbf_verify_result** out )
{
  if ( !out )
  {
    return null_argument();
  }
  return guarded( [&] {
    mbf::verify_options options;
    options.jobs = jobs;
    if ( flags & MBF_VERIFY_INJECT_CANONICAL_FAULT )
    {
      options.canonicalizer = []( const mbf::truth_table& t ) { return t; };
    }
    *out = new mbf_verify_result{ mbf::verify( n, options ) };
    return MBF_OK;
  } );
}

int mbf_verify_passed( const mbf_verify_result* result )
{
  return result && result->value.passed() ? 1 : 0;
}

size_t mbf_verify_check_count( const mbf_verify_result* result )
{
  return result ? result->value.checks.size() : 0;
}

mbf_status mbf_verify_check( const mbf_verify_result* result, size_t i, const char** name, int* passed, const char** detail )
{
  if ( !result )
  {
    return null_argument();
  }
  if ( i >= result->value.checks.size() )
  {
    return fail( MBF_OUT_OF_RANGE, "check index out of range" );
  }
  const auto& c = result->value.checks[i];
  if ( name )
  {
    *name = c.name.c_str();
  }
  if ( passed )
  {
    *passed = c.passed ? 1 : 0;
  }
  if ( detail )
  {
    *detail = c.detail.c_str();
  }
  return MBF_OK;
}

void mbf_verify_free( mbf_verify_result* result )
{
  delete result;
}

mbf_status mbf_korshunov_estimate( int n, char* buffer, size_t capacity, size_t* needed )
{
  return guarded( [&] { return copy_text( decimal( mbf::korshunov_estimate( n ) ), buffer, capacity, needed ); } );
}

mbf_status mbf_korshunov_log2( int n, double* out )
{
  if ( !out )
  {
    return null_argument();
  }
  return guarded( [&] {
    *out = mbf::korshunov_log2( n ).convert_to<double>();
    return MBF_OK;
  } );
}

mbf_status mbf_known_dedekind( int n, char* buffer, size_t capacity, size_t* needed )
{
  const auto d = mbf::known_dedekind( n );
  if ( !d )
  {
    return fail( MBF_OUT_OF_RANGE, "D(n) is known here for 0 <= n <= 8" );
  }
  return guarded( [&] { return copy_text( d->str(), buffer, capacity, needed ); } );
}

mbf_status mbf_lower_bound( int n, uint64_t* out )
{
  if ( !out )
  {
    return null_argument();
  }
  const auto d = mbf::known_dedekind( n );
  if ( !d )
  {
    return fail( MBF_OUT_OF_RANGE, "D(n) is known here for 0 <= n <= 8" );
  }
  return guarded( [&] {
    *out = mbf::lower_bound_r( n, *d );
    return MBF_OK;
  } );
}

mbf_status mbf_refined_lower_bound( int n, uint64_t* out )
{
  if ( !out )
  {
    return null_argument();
  }
  const auto d = mbf::known_dedekind( n );
  if ( !d || n > mbf::kMaxEnumVars )
  {
    return fail( MBF_OUT_OF_RANGE, "the refined bound supports 0 <= n <= 7" );
  }
  return guarded( [&] {
    *out = mbf::refined_lower_bound_r( n, *d );
    return MBF_OK;
  } );
}

mbf_status mbf_table_from_string( const char* bits, mbf_table** out )
{
  if ( !bits || !out )
  {
    return null_argument();
  }
  return guarded( [&] { return new_table( mbf::truth_table::from_string( bits ), out ); } );
}

mbf_status mbf_table_from_terms( int n, const uint32_t* terms, size_t count, mbf_table** out )
{
  if ( !out || ( count > 0 && !terms ) )
  {
    return null_argument();
  }
  if ( n < 0 || n > mbf::kMaxVars )
  {
    return fail( MBF_OUT_OF_RANGE, "variable count out of range" );
  }
  const std::uint32_t limit = std::uint32_t( 1 ) << n;
  for ( size_t i = 0; i < count; ++i )
  {
    if ( terms[i] >= limit )
    {
      return fail( MBF_OUT_OF_RANGE, "term uses a variable beyond n" );
    }
  }
  return guarded( [&] {
    auto t = mbf::truth_table::from_function( n, [&]( mbf::subset_mask m ) {
      for ( size_t i = 0; i < count; ++i )
      {
        if ( ( terms[i] & m ) == terms[i] )
        {
          return true;
        }
      }
      return false;
    } );
    return new_table( std::move( t ), out );
  } );
}

mbf_status mbf_table_unpack( int n, const uint32_t* words, size_t count, mbf_table** out )
{
  if ( !out || ( count > 0 && !words ) )
  {
    return null_argument();
  }
  return guarded( [&] { return new_table( mbf::unpack( std::span<const std::uint32_t>( words, count ), n ), out ); } );
}

int mbf_table_num_vars( const mbf_table* table )
{
  return table ? table->value.num_vars() : -1;
}

int mbf_table_is_monotone( const mbf_table* table )
{
  return table && mbf::is_monotone( table->value ) ? 1 : 0;
}

mbf_status mbf_table_to_string( const mbf_table* table, char* buffer, size_t capacity, size_t* needed )
{
  if ( !table )
  {
    return null_argument();
  }
  return guarded( [&] { return copy_text( table->value.to_string(), buffer, capacity, needed ); } );
}

mbf_status mbf_table_pack( const mbf_table* table, uint32_t* words, size_t capacity, size_t* written )
{
  if ( !table )
  {
    return null_argument();
  }
  return guarded( [&] {
    const auto packed = mbf::pack( table->value );
    if ( written )
    {
      *written = packed.size();
    }
    if ( !words || capacity < packed.size() )
    {
      return fail( MBF_BUFFER_TOO_SMALL, "buffer too small" );
    }
    std::copy( packed.begin(), packed.end(), words );
    return MBF_OK;
  } );
}

mbf_status mbf_table_minimal_terms( const mbf_table* table, char* buffer, size_t capacity, size_t* needed )
{
  if ( !table )
  {
    return null_argument();
  }
  return guarded( [&] { return copy_text( mbf::to_minimal_terms( table->value ).to_string(), buffer, capacity, needed ); } );
}

mbf_status mbf_table_profile( const mbf_table* table, char* buffer, size_t capacity, size_t* needed )
{
  if ( !table )
  {
    return null_argument();
  }
  return guarded( [&] { return copy_text( mbf::profile_of( mbf::to_minimal_terms( table->value ) ).to_string(), buffer, capacity, needed ); } );
}

mbf_status mbf_table_canonical( const mbf_table* table, mbf_table** canonical, uint64_t* orbit_size, uint64_t* automorphisms )
{
  if ( !table )
  {
    return null_argument();
  }
  return guarded( [&] {
    auto record = mbf::canonical_form( table->value );
    if ( orbit_size )
    {
      *orbit_size = record.orbit_size;
    }
    if ( automorphisms )
    {
      *automorphisms = record.automorphism_count;
    }
    if ( canonical )
    {
      return new_table( std::move( record.canonical ), canonical );
    }
    return MBF_OK;
  } );
}

void mbf_table_free( mbf_table* table )
{
  delete table;
}

} // extern "C"
