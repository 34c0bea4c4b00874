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

/*
 * C interface of the mbfkit shared library.
 *
 * Every fallible call returns an mbf_status; on failure mbf_last_error()
 * holds a message for the calling thread.  Objects are opaque handles owned
 * by the caller and released with the matching *_free function (NULL is
 * accepted).  Functions that produce text write a NUL-terminated string into
 * (buffer, capacity); when buffer is NULL or too small they return
 * MBF_BUFFER_TOO_SMALL.  In every case *needed, when not NULL, receives the
 * length including the terminator.
 */

#ifndef MBFKIT_H
#define MBFKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined( MBFKIT_BUILDING )
#define MBF_API __attribute__( ( visibility( "default" ) ) )
#else
#define MBF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mbf_status
{
  MBF_OK = 0,
  MBF_INVALID_ARGUMENT = 1,
  MBF_NOT_MONOTONE = 2,
  MBF_NOT_ANTICHAIN = 3,
  MBF_DIMENSION_MISMATCH = 4,
  MBF_OUT_OF_RANGE = 5,
  MBF_INFEASIBLE_PROFILE = 6,
  MBF_IO = 7,
  MBF_FORMAT = 8,
  MBF_VERSION_MISMATCH = 9,
  MBF_VALIDATION = 10,
  MBF_RESULT_MISMATCH = 11,
  MBF_INTERRUPTED = 12,
  MBF_INTERNAL = 13,
  MBF_BUFFER_TOO_SMALL = 14,
  MBF_OUT_OF_MEMORY = 15
} mbf_status;

typedef struct mbf_profiles mbf_profiles;
typedef struct mbf_report mbf_report;
typedef struct mbf_table mbf_table;
typedef struct mbf_verify_result mbf_verify_result;

MBF_API const char* mbf_version( void );
MBF_API const char* mbf_status_string( mbf_status status );
/* Message of the last failure on this thread; empty after a success. */
MBF_API const char* mbf_last_error( void );

/* ---- profiles ---------------------------------------------------------- */

/* Realizable profiles on n variables (0 <= n <= 9), sorted. */
MBF_API mbf_status mbf_profiles_generate( int n, mbf_profiles** out );
MBF_API size_t mbf_profiles_count( const mbf_profiles* profiles );
/* Text form "(a_1,...,a_n)" of entry i. */
MBF_API mbf_status mbf_profiles_get( const mbf_profiles* profiles, size_t i, char* buffer, size_t capacity, size_t* needed );
/* One profile per line. */
MBF_API mbf_status mbf_profiles_write( const mbf_profiles* profiles, const char* path );
MBF_API void mbf_profiles_free( mbf_profiles* profiles );

/* ---- counting ---------------------------------------------------------- */

typedef void ( *mbf_log_fn )( const char* message, void* context );

typedef struct mbf_count_options
{
  unsigned jobs;              /* 0: hardware parallelism */
  int use_shortcuts;          /* nonzero: derive counts from related profiles */
  int extended;               /* nonzero: allow n = 7 */
  const char* checkpoint_dir; /* NULL: no checkpoints */
  size_t stop_after;          /* 0: no limit; else stop with MBF_INTERRUPTED */
  mbf_log_fn log;
  void* log_context;
} mbf_count_options;

MBF_API void mbf_count_options_init( mbf_count_options* options );

/* All profiles on n variables; options may be NULL. */
MBF_API mbf_status mbf_count_all( int n, const mbf_count_options* options, mbf_report** out );

/* Totals include the constant-1 function. */
MBF_API mbf_status mbf_report_totals( const mbf_report* report, uint64_t* r_total, uint64_t* d_total, uint64_t* asymmetric );
/* Classes and functions with exactly k minimal terms. */
MBF_API mbf_status mbf_report_by_minterms( const mbf_report* report, int k, uint64_t* r_count, uint64_t* d_count );
MBF_API size_t mbf_report_profile_count( const mbf_report* report );
MBF_API mbf_status mbf_report_lookup( const mbf_report* report, const char* profile, uint64_t* r_count, uint64_t* d_count );
/* CSV to path, or to standard output when path is NULL. */
MBF_API mbf_status mbf_report_write_csv( const mbf_report* report, const char* path, int include_elapsed );
/* "R(n)=... D(n)=..." */
MBF_API mbf_status mbf_report_summary( const mbf_report* report, char* buffer, size_t capacity, size_t* needed );
MBF_API void mbf_report_free( mbf_report* report );

/* Counts of one profile given as "(a_1,...,a_n)", n <= 7. */
MBF_API mbf_status mbf_count_profile( const char* profile, unsigned jobs, uint64_t* r_count, uint64_t* d_count );

/* ---- verification ------------------------------------------------------ */

enum
{
  /* Replace the least-representative map by the identity. */
  MBF_VERIFY_INJECT_CANONICAL_FAULT = 1u
};

MBF_API mbf_status mbf_verify( int n, unsigned flags, unsigned jobs, mbf_verify_result** out );
MBF_API int mbf_verify_passed( const mbf_verify_result* result );
MBF_API size_t mbf_verify_check_count( const mbf_verify_result* result );
/* Strings stay valid until the result is freed. */
MBF_API mbf_status mbf_verify_check( const mbf_verify_result* result, size_t i, const char** name, int* passed, const char** detail );
MBF_API void mbf_verify_free( mbf_verify_result* result );

/* ---- estimates and bounds ---------------------------------------------- */

/* Decimal integer nearest to the asymptotic estimate of D(n), n >= 2. */
MBF_API mbf_status mbf_korshunov_estimate( int n, char* buffer, size_t capacity, size_t* needed );
MBF_API mbf_status mbf_korshunov_log2( int n, double* out );
/* Decimal D(n) for 0 <= n <= 8. */
MBF_API mbf_status mbf_known_dedekind( int n, char* buffer, size_t capacity, size_t* needed );
/* ceil(D(n) / n!) for 0 <= n <= 8. */
MBF_API mbf_status mbf_lower_bound( int n, uint64_t* out );
/* The bound sharpened by highly symmetric classes, 0 <= n <= 7. */
MBF_API mbf_status mbf_refined_lower_bound( int n, uint64_t* out );

/* ---- truth tables ------------------------------------------------------ */

/* Position string of length 2^n. */
MBF_API mbf_status mbf_table_from_string( const char* bits, mbf_table** out );
/* Upward closure of the given subsets (bit i - 1 stands for variable i). */
MBF_API mbf_status mbf_table_from_terms( int n, const uint32_t* terms, size_t count, mbf_table** out );
/* 32-bit packed words as produced by mbf_table_pack. */
MBF_API mbf_status mbf_table_unpack( int n, const uint32_t* words, size_t count, mbf_table** out );
MBF_API int mbf_table_num_vars( const mbf_table* table );
MBF_API int mbf_table_is_monotone( const mbf_table* table );
MBF_API mbf_status mbf_table_to_string( const mbf_table* table, char* buffer, size_t capacity, size_t* needed );
/* Writes up to capacity words; *written receives the full word count. */
MBF_API mbf_status mbf_table_pack( const mbf_table* table, uint32_t* words, size_t capacity, size_t* written );
/* "{{1},{2,3}}" */
MBF_API mbf_status mbf_table_minimal_terms( const mbf_table* table, char* buffer, size_t capacity, size_t* needed );
MBF_API mbf_status mbf_table_profile( const mbf_table* table, char* buffer, size_t capacity, size_t* needed );
MBF_API mbf_status mbf_table_canonical( const mbf_table* table, mbf_table** canonical, uint64_t* orbit_size, uint64_t* automorphisms );
MBF_API void mbf_table_free( mbf_table* table );

#ifdef __cplusplus
}
#endif

#endif
