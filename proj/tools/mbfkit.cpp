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

#include <mbfkit/mbfkit.h>

#include <CLI11.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>

namespace
{

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_interrupted = 3;

template<class T, void ( *Free )( T* )>
struct handle_deleter
{
  void operator()( T* p ) const { Free( p ); }
};

using profiles_ptr = std::unique_ptr<mbf_profiles, handle_deleter<mbf_profiles, mbf_profiles_free>>;
using report_ptr = std::unique_ptr<mbf_report, handle_deleter<mbf_report, mbf_report_free>>;
using verify_ptr = std::unique_ptr<mbf_verify_result, handle_deleter<mbf_verify_result, mbf_verify_free>>;

int report_failure( mbf_status status )
{
  std::fprintf( stderr, "mbfkit: %s: %s\n", mbf_status_string( status ), mbf_last_error() );
  return status == MBF_INTERRUPTED ? exit_interrupted : exit_failure;
}

template<class Fn>
std::optional<std::string> read_text( Fn&& fn )
{
  std::size_t needed = 0;
  fn( nullptr, 0, &needed );
  std::string text( needed, '\0' );
  if ( fn( text.data(), text.size(), &needed ) != MBF_OK )
  {
    return std::nullopt;
  }
  text.resize( needed - 1 );
  return text;
}

struct profiles_args
{
  int n = 0;
  std::string output;
};

int run_profiles( const profiles_args& args )
{
  mbf_profiles* raw = nullptr;
  if ( auto status = mbf_profiles_generate( args.n, &raw ); status != MBF_OK )
  {
    return report_failure( status );
  }
  profiles_ptr profiles( raw );
  if ( !args.output.empty() )
  {
    if ( auto status = mbf_profiles_write( profiles.get(), args.output.c_str() ); status != MBF_OK )
    {
      return report_failure( status );
    }
  }
  std::printf( "%zu\n", mbf_profiles_count( profiles.get() ) );
  return 0;
}

struct count_args
{
  int n = 0;
  std::string profile;
  std::optional<int> k;
  bool extended = false;
  unsigned jobs = 0;
  std::string checkpoint_dir;
  bool no_checkpoint = false;
  bool no_shortcuts = false;
  bool no_elapsed = false;
  bool verbose = false;
  std::size_t stop_after = 0;
  std::string output;
};

void log_to_stderr( const char* message, void* )
{
  std::fprintf( stderr, "%s\n", message );
}

int run_count( const count_args& args )
{
  if ( args.n == 7 && !args.extended )
  {
    std::fprintf( stderr, "mbfkit: n = 7 is a long computation; pass --extended to run it\n" );
    return exit_usage;
  }
  if ( !args.profile.empty() )
  {
    std::uint64_t r = 0, d = 0;
    if ( auto status = mbf_count_profile( args.profile.c_str(), args.jobs, &r, &d ); status != MBF_OK )
    {
      return report_failure( status );
    }
    std::printf( "%s R=%" PRIu64 " D=%" PRIu64 "\n", args.profile.c_str(), r, d );
    return 0;
  }

  mbf_count_options options;
  mbf_count_options_init( &options );
  options.jobs = args.jobs;
  options.extended = args.extended ? 1 : 0;
  options.use_shortcuts = args.no_shortcuts ? 0 : 1;
  options.stop_after = args.stop_after;
  std::string checkpoint_dir = args.checkpoint_dir;
  if ( checkpoint_dir.empty() )
  {
    const char* env = std::getenv( "MBFKIT_CHECKPOINT_DIR" );
    checkpoint_dir = env && *env ? env : "mbfkit-checkpoints";
  }
  if ( !args.no_checkpoint )
  {
    options.checkpoint_dir = checkpoint_dir.c_str();
  }
  if ( args.verbose )
  {
    options.log = log_to_stderr;
  }

  mbf_report* raw = nullptr;
  if ( auto status = mbf_count_all( args.n, &options, &raw ); status != MBF_OK )
  {
    return report_failure( status );
  }
  report_ptr report( raw );

  if ( args.k )
  {
    std::uint64_t r = 0, d = 0;
    mbf_report_by_minterms( report.get(), *args.k, &r, &d );
    std::printf( "R_%d(%d)=%" PRIu64 " D_%d(%d)=%" PRIu64 "\n", *args.k, args.n, r, *args.k, args.n, d );
    return 0;
  }

  const char* path = args.output.empty() || args.output == "-" ? nullptr : args.output.c_str();
  if ( auto status = mbf_report_write_csv( report.get(), path, args.no_elapsed ? 0 : 1 ); status != MBF_OK )
  {
    return report_failure( status );
  }
  std::uint64_t asymmetric = 0;
  mbf_report_totals( report.get(), nullptr, nullptr, &asymmetric );
  const auto summary = read_text( [&]( char* b, std::size_t c, std::size_t* n ) { return mbf_report_summary( report.get(), b, c, n ); } );
  std::printf( "%s asymmetric=%" PRIu64 "\n", summary.value_or( "" ).c_str(), asymmetric );
  return 0;
}

struct verify_args
{
  int n = 0;
  unsigned jobs = 0;
  bool inject_fault = false;
};

int run_verify( const verify_args& args )
{
  mbf_verify_result* raw = nullptr;
  const unsigned flags = args.inject_fault ? MBF_VERIFY_INJECT_CANONICAL_FAULT : 0u;
  if ( auto status = mbf_verify( args.n, flags, args.jobs, &raw ); status != MBF_OK )
  {
    return report_failure( status );
  }
  verify_ptr result( raw );
  for ( std::size_t i = 0; i < mbf_verify_check_count( result.get() ); ++i )
  {
    const char* name = nullptr;
    const char* detail = nullptr;
    int passed = 0;
    mbf_verify_check( result.get(), i, &name, &passed, &detail );
    std::printf( "%s %s (%s)\n", passed ? "PASS" : "FAIL", name, detail );
  }
  const bool ok = mbf_verify_passed( result.get() ) != 0;
  std::printf( "verify n=%d: %s\n", args.n, ok ? "PASS" : "FAIL" );
  return ok ? 0 : exit_failure;
}

struct estimate_args
{
  int n = 0;
  bool refined = false;
};

int run_estimate( const estimate_args& args )
{
  const int n = args.n;
  if ( n < 0 )
  {
    std::fprintf( stderr, "mbfkit: n must be nonnegative\n" );
    return exit_usage;
  }
  std::optional<std::string> estimate;
  double log2_estimate = 0.0;
  if ( n >= 2 )
  {
    estimate = read_text( [&]( char* b, std::size_t c, std::size_t* k ) { return mbf_korshunov_estimate( n, b, c, k ); } );
    if ( !estimate || mbf_korshunov_log2( n, &log2_estimate ) != MBF_OK )
    {
      return report_failure( MBF_OUT_OF_RANGE );
    }
    std::printf( "estimate D(%d) ~ %s\n", n, estimate->c_str() );
    std::printf( "log2 estimate = %.6f\n", log2_estimate );
  }
  else
  {
    std::printf( "estimate D(%d): not defined for n < 2\n", n );
  }

  const auto known = read_text( [&]( char* b, std::size_t c, std::size_t* k ) { return mbf_known_dedekind( n, b, c, k ); } );
  if ( !known )
  {
    std::printf( "D(%d) unknown; no lower bound\n", n );
    return 0;
  }
  std::printf( "D(%d)=%s\n", n, known->c_str() );
  if ( estimate )
  {
    const double ratio = std::exp2( log2_estimate - std::log2( std::strtod( known->c_str(), nullptr ) ) );
    std::printf( "ratio estimate/D = %.6f\n", ratio );
  }
  std::uint64_t bound = 0;
  if ( auto status = mbf_lower_bound( n, &bound ); status != MBF_OK )
  {
    return report_failure( status );
  }
  std::printf( "lower bound R(%d) >= %" PRIu64 "\n", n, bound );
  if ( args.refined )
  {
    std::uint64_t refined = 0;
    if ( auto status = mbf_refined_lower_bound( n, &refined ); status != MBF_OK )
    {
      return report_failure( status );
    }
    std::printf( "refined lower bound R(%d) >= %" PRIu64 "\n", n, refined );
  }
  return 0;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Counting monotone Boolean functions and their classes under variable renaming" };
  app.require_subcommand( 1 );
  int exit_code = 0;

  profiles_args pa;
  auto* profiles = app.add_subcommand( "profiles", "Generate all realizable profiles and print how many there are" );
  profiles->add_option( "n", pa.n, "Number of variables (0..9)" )->required();
  profiles->add_option( "-o,--output", pa.output, "Write the profiles to this file, one per line" );
  profiles->callback( [&] { exit_code = run_profiles( pa ); } );

  count_args ca;
  auto* count = app.add_subcommand( "count", "Count functions and classes per profile" );
  count->add_option( "n", ca.n, "Number of variables (0..7)" )->required();
  count->add_option( "--profile", ca.profile, "Count one profile, e.g. \"(0,3,2,0,0)\"" );
  count->add_option( "--k", ca.k, "Print the totals for functions with exactly k minimal terms" );
  count->add_flag( "--extended", ca.extended, "Allow the long n = 7 computation" );
  count->add_option( "--jobs", ca.jobs, "Worker threads (0: all cores)" );
  count->add_option( "--checkpoint-dir", ca.checkpoint_dir, "Checkpoint directory (default $MBFKIT_CHECKPOINT_DIR or ./mbfkit-checkpoints)" );
  count->add_flag( "--no-checkpoint", ca.no_checkpoint, "Do not read or write checkpoints" );
  count->add_flag( "--no-shortcuts", ca.no_shortcuts, "Enumerate every profile directly" );
  count->add_flag( "--no-elapsed", ca.no_elapsed, "Omit the elapsed_seconds column" );
  count->add_flag( "-v,--verbose", ca.verbose, "Log progress to standard error" );
  count->add_option( "--stop-after", ca.stop_after, "Stop after enumerating this many profiles (resume later)" );
  count->add_option( "-o,--output", ca.output, "CSV output file (default: standard output)" );
  count->callback( [&] { exit_code = run_count( ca ); } );

  verify_args va;
  auto* verify = app.add_subcommand( "verify", "Check the fast paths against brute force and known values" );
  verify->add_option( "n", va.n, "Number of variables (0..6)" )->required();
  verify->add_option( "--jobs", va.jobs, "Worker threads (0: all cores)" );
  verify->add_flag( "--inject-canonical-fault", va.inject_fault, "Use a broken least-representative map (must fail)" );
  verify->callback( [&] { exit_code = run_verify( va ); } );

  estimate_args ea;
  auto* estimate = app.add_subcommand( "estimate", "Asymptotic estimate of D(n) and lower bounds on R(n)" );
  estimate->add_option( "n", ea.n, "Number of variables" )->required();
  estimate->add_flag( "--refined", ea.refined, "Also print the bound sharpened by symmetric classes (n <= 7)" );
  estimate->callback( [&] { exit_code = run_estimate( ea ); } );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e );
    return code == 0 ? 0 : exit_usage;
  }
  return exit_code;
}
