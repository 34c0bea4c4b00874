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

#include "mbfkit/truth_table.hpp"

#include <algorithm>
#include <bit>

namespace mbf
{

const char* to_string( error_code code ) noexcept
{
  switch ( code )
  {
  case error_code::invalid_argument: return "invalid argument";
  case error_code::not_monotone: return "function is not monotone";
  case error_code::not_antichain: return "terms do not form an antichain";
  case error_code::dimension_mismatch: return "dimension mismatch";
  case error_code::out_of_range: return "parameter out of range";
  case error_code::infeasible_profile: return "infeasible profile";
  case error_code::io: return "i/o failure";
  case error_code::format: return "malformed file";
  case error_code::version_mismatch: return "format version mismatch";
  case error_code::validation: return "validation failure";
  case error_code::result_mismatch: return "result mismatch";
  case error_code::interrupted: return "computation interrupted";
  case error_code::internal: return "internal error";
  }
  return "unknown error";
}

namespace
{

void check_num_vars( int num_vars )
{
  if ( num_vars < 0 || num_vars > kMaxVars )
  {
    throw error( error_code::out_of_range, "variable count must lie in [0, " + std::to_string( kMaxVars ) + "], got " + std::to_string( num_vars ) );
  }
}

std::size_t word_count( int num_vars )
{
  return num_vars <= 6 ? 1u : std::size_t( 1 ) << ( num_vars - 6 );
}

std::uint64_t valid_bits_mask( int num_vars )
{
  return num_vars >= 6 ? ~std::uint64_t( 0 ) : ( std::uint64_t( 1 ) << ( 1u << num_vars ) ) - 1u;
}

} // namespace

truth_table::truth_table( int num_vars )
    : num_vars_( num_vars )
{
  check_num_vars( num_vars );
  words_.assign( word_count( num_vars ), 0u );
}

truth_table truth_table::constant( int num_vars, bool value )
{
  truth_table t( num_vars );
  if ( value )
  {
    std::fill( t.words_.begin(), t.words_.end(), valid_bits_mask( num_vars ) );
  }
  return t;
}

truth_table truth_table::from_string( std::string_view bits )
{
  if ( bits.empty() || !std::has_single_bit( bits.size() ) )
  {
    throw error( error_code::invalid_argument, "truth table length must be a power of two" );
  }
  const int num_vars = std::countr_zero( bits.size() );
  check_num_vars( num_vars );
  truth_table t( num_vars );
  for ( std::uint32_t j = 0; j < bits.size(); ++j )
  {
    if ( bits[j] != '0' && bits[j] != '1' )
    {
      throw error( error_code::invalid_argument, "truth table must consist of '0' and '1'" );
    }
    if ( bits[j] == '1' )
    {
      const auto m = position_to_input( num_vars, j );
      t.words_[m >> 6] |= std::uint64_t( 1 ) << ( m & 63 );
    }
  }
  return t;
}

truth_table truth_table::from_subset_words( int num_vars, std::vector<std::uint64_t> words )
{
  truth_table t( num_vars );
  if ( words.size() != t.words_.size() )
  {
    throw error( error_code::dimension_mismatch, "word count does not match variable count" );
  }
  if ( ( words[0] & ~valid_bits_mask( num_vars ) ) != 0u )
  {
    throw error( error_code::invalid_argument, "bits beyond 2^n are set" );
  }
  t.words_ = std::move( words );
  return t;
}

std::uint32_t truth_table::count_ones() const noexcept
{
  std::uint32_t total = 0;
  for ( auto w : words_ )
  {
    total += static_cast<std::uint32_t>( std::popcount( w ) );
  }
  return total;
}

std::string truth_table::to_string() const
{
  std::string s( size(), '0' );
  for ( std::uint32_t j = 0; j < size(); ++j )
  {
    if ( at_position( j ) )
    {
      s[j] = '1';
    }
  }
  return s;
}

std::strong_ordering operator<=>( const truth_table& a, const truth_table& b )
{
  if ( a.num_vars_ != b.num_vars_ )
  {
    return a.num_vars_ <=> b.num_vars_;
  }
  for ( auto i = a.words_.size(); i-- > 0; )
  {
    if ( a.words_[i] != b.words_[i] )
    {
      return a.words_[i] <=> b.words_[i];
    }
  }
  return std::strong_ordering::equal;
}

bool is_antichain( std::span<const subset_mask> terms )
{
  for ( std::size_t i = 0; i < terms.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < terms.size(); ++j )
    {
      const auto both = terms[i] & terms[j];
      if ( both == terms[i] || both == terms[j] )
      {
        return false;
      }
    }
  }
  return true;
}

minimal_term_set::minimal_term_set( int num_vars, std::vector<subset_mask> terms )
    : num_vars_( num_vars ), terms_( std::move( terms ) )
{
  check_num_vars( num_vars );
  const subset_mask full = ( subset_mask( 1 ) << num_vars ) - 1u;
  for ( auto t : terms_ )
  {
    if ( ( t & ~full ) != 0u )
    {
      throw error( error_code::out_of_range, "term mentions a variable beyond n" );
    }
  }
  std::sort( terms_.begin(), terms_.end() );
  if ( !is_antichain( terms_ ) )
  {
    throw error( error_code::not_antichain, "terms are not pairwise incomparable" );
  }
}

minimal_term_set minimal_term_set::from_lists( int num_vars, std::initializer_list<std::initializer_list<int>> lists )
{
  std::vector<subset_mask> terms;
  for ( const auto& list : lists )
  {
    subset_mask m = 0;
    for ( int v : list )
    {
      if ( v < 1 || v > num_vars )
      {
        throw error( error_code::out_of_range, "variable index out of range" );
      }
      m |= subset_mask( 1 ) << ( v - 1 );
    }
    terms.push_back( m );
  }
  return minimal_term_set( num_vars, std::move( terms ) );
}

std::string minimal_term_set::to_string() const
{
  // Mask order is colex order on the subsets.
  const auto& sorted = terms_;
  std::string s = "{";
  for ( std::size_t i = 0; i < sorted.size(); ++i )
  {
    if ( i != 0 )
    {
      s += ',';
    }
    s += '{';
    bool first = true;
    for ( int v = 0; v < num_vars_; ++v )
    {
      if ( ( sorted[i] >> v ) & 1u )
      {
        if ( !first )
        {
          s += ',';
        }
        s += std::to_string( v + 1 );
        first = false;
      }
    }
    s += '}';
  }
  s += '}';
  return s;
}

bool is_monotone( const truth_table& t )
{
  const auto n = t.num_vars();
  for ( subset_mask m = 0; m < t.size(); ++m )
  {
    if ( !t.value( m ) )
    {
      continue;
    }
    for ( int i = 0; i < n; ++i )
    {
      const subset_mask up = m | ( subset_mask( 1 ) << i );
      if ( up != m && !t.value( up ) )
      {
        return false;
      }
    }
  }
  return true;
}

minimal_term_set to_minimal_terms( const truth_table& t )
{
  if ( !is_monotone( t ) )
  {
    throw error( error_code::not_monotone, "minimal terms requested for a non-monotone table" );
  }
  std::vector<subset_mask> terms;
  for ( subset_mask m = 0; m < t.size(); ++m )
  {
    if ( !t.value( m ) )
    {
      continue;
    }
    bool minimal = true;
    for ( auto rest = m; rest != 0u && minimal; rest &= rest - 1u )
    {
      minimal = !t.value( m & ~( rest & -rest ) );
    }
    if ( minimal )
    {
      terms.push_back( m );
    }
  }
  return minimal_term_set( t.num_vars(), std::move( terms ) );
}

truth_table from_minimal_terms( const minimal_term_set& m )
{
  const auto terms = m.terms();
  return truth_table::from_function( m.num_vars(), [&]( subset_mask input ) {
    return std::any_of( terms.begin(), terms.end(), [input]( subset_mask term ) { return ( input & term ) == term; } );
  } );
}

std::vector<std::uint32_t> pack( const truth_table& t )
{
  std::vector<std::uint32_t> words( packed_word_count( t.num_vars() ), 0u );
  for ( std::uint32_t j = 0; j < t.size(); ++j )
  {
    if ( t.at_position( j ) )
    {
      words[j >> 5] |= std::uint32_t( 1 ) << ( j & 31 );
    }
  }
  return words;
}

truth_table unpack( std::span<const std::uint32_t> words, int num_vars )
{
  check_num_vars( num_vars );
  if ( words.size() != packed_word_count( num_vars ) )
  {
    throw error( error_code::dimension_mismatch, "expected " + std::to_string( packed_word_count( num_vars ) ) + " packed words, got " + std::to_string( words.size() ) );
  }
  const std::uint32_t size = std::uint32_t( 1 ) << num_vars;
  if ( size < 32u && ( words[0] >> size ) != 0u )
  {
    throw error( error_code::invalid_argument, "nonzero padding bits in packed table" );
  }
  return truth_table::from_function( num_vars, [&]( subset_mask input ) {
    const std::uint32_t j = size - 1u - input;
    return ( ( words[j >> 5] >> ( j & 31 ) ) & 1u ) != 0u;
  } );
}

} // namespace mbf
