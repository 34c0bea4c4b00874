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

#include "mbfkit/enumerate.hpp"

#include "mbfkit/store.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace mbf
{

namespace
{

using block2 = detail::block<2>;

void check_engine_vars( int num_vars )
{
  if ( num_vars < 0 || num_vars > kMaxEnumVars )
  {
    throw error( error_code::out_of_range, "enumeration supports 0 <= n <= " + std::to_string( kMaxEnumVars ) );
  }
}

bool block_less( const class_entry& a, const class_entry& b )
{
  return detail::less( a.table, b.table );
}

/*! Polynomial hash over the 32-bit chunks of a table, top chunk first:
    b1 (alpha + b2 (alpha + b3 (alpha + b4))) mod p, then mixed for bucketing. */
struct table_hash
{
  static constexpr std::uint64_t prime = 4294967291ull;
  static constexpr std::uint64_t alpha = 131u;

  std::size_t chunks = 1;

  std::size_t operator()( const block2& t ) const noexcept
  {
    auto chunk = [&]( std::size_t i ) -> std::uint64_t { return ( t[i >> 1] >> ( 32u * ( i & 1u ) ) ) & 0xffffffffu; };
    std::uint64_t acc = chunk( 0 ) % prime;
    for ( std::size_t i = 1; i < chunks; ++i )
    {
      acc = ( chunk( i ) % prime ) * ( ( alpha + acc ) % prime ) % prime;
    }
    // Tables are rarely zero in the top chunk; fold in the raw words to keep zero products apart.
    std::uint64_t h = acc ^ ( t[0] * 0x9e3779b97f4a7c15ull ) ^ ( t[1] * 0xc2b2ae3d27d4eb4full );
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 32;
    return static_cast<std::size_t>( h );
  }
};

using class_map = std::unordered_map<block2, std::uint32_t, table_hash>;

struct extension_context
{
  int num_vars;
  std::vector<subset_mask> candidates;
  std::vector<block2> upsets;
};

extension_context make_context( int num_vars, int cardinality )
{
  extension_context ctx{ num_vars, {}, {} };
  const subset_mask size = subset_mask( 1 ) << num_vars;
  ctx.upsets.resize( size );
  for ( subset_mask s = 0; s < size; ++s )
  {
    if ( popcount( s ) == cardinality )
    {
      ctx.candidates.push_back( s );
    }
    block2 up{};
    for ( subset_mask m = 0; m < size; ++m )
    {
      if ( ( m & s ) == s )
      {
        up[m >> 6] |= std::uint64_t( 1 ) << ( m & 63 );
      }
    }
    ctx.upsets[s] = up;
  }
  return ctx;
}

inline bool block_value( const block2& t, subset_mask m ) noexcept
{
  return ( t[m >> 6] >> ( m & 63 ) ) & 1u;
}

void minimal_terms_of( const block2& t, int num_vars, std::vector<subset_mask>& out )
{
  out.clear();
  const subset_mask size = subset_mask( 1 ) << num_vars;
  for ( subset_mask m = 0; m < size; ++m )
  {
    if ( !block_value( t, m ) )
    {
      continue;
    }
    bool minimal = true;
    for ( auto rest = m; rest != 0u && minimal; rest &= rest - 1u )
    {
      minimal = !block_value( t, m & ~( rest & -rest ) );
    }
    if ( minimal )
    {
      out.push_back( m );
    }
  }
}

std::pair<block2, std::uint64_t> canonicalize_block( const block2& t, int num_vars )
{
  if ( num_vars <= 6 )
  {
    const auto r = detail::canonicalize<1>( detail::block<1>{ t[0] }, num_vars );
    return { block2{ r.canonical[0], 0u }, r.automorphisms };
  }
  const auto r = detail::canonicalize<2>( t, num_vars );
  return { r.canonical, r.automorphisms };
}

void extend_range( const extension_context& ctx, std::span<const class_entry> base, std::size_t first, std::size_t stride, class_map& out )
{
  const auto group = factorial( ctx.num_vars );
  std::vector<subset_mask> terms;
  for ( auto i = first; i < base.size(); i += stride )
  {
    const auto& table = base[i].table;
    minimal_terms_of( table, ctx.num_vars, terms );
    for ( auto s : ctx.candidates )
    {
      // f(s) = 1 means some term lies inside s.
      if ( block_value( table, s ) )
      {
        continue;
      }
      if ( std::any_of( terms.begin(), terms.end(), [s]( subset_mask t ) { return ( t & s ) == s; } ) )
      {
        continue;
      }
      const auto& up = ctx.upsets[s];
      const block2 extended{ table[0] | up[0], table[1] | up[1] };
      const auto [canonical, automorphisms] = canonicalize_block( extended, ctx.num_vars );
      out.emplace( canonical, static_cast<std::uint32_t>( group / automorphisms ) );
    }
  }
}

unsigned resolve_jobs( unsigned jobs )
{
  if ( jobs == 0 )
  {
    jobs = std::max( 1u, std::thread::hardware_concurrency() );
  }
  return jobs;
}

} // namespace

const char* to_string( profile_source source ) noexcept
{
  switch ( source )
  {
  case profile_source::enumerated: return "enumerated";
  case profile_source::complement: return "complement";
  case profile_source::singleton: return "singleton";
  case profile_source::reverse_dual: return "reverse-dual";
  }
  return "unknown";
}

profile_class_list::profile_class_list( profile target, std::vector<class_entry> entries )
    : profile_( target ), entries_( std::move( entries ) )
{
  check_engine_vars( profile_.num_vars() );
  std::sort( entries_.begin(), entries_.end(), block_less );
  for ( std::size_t i = 1; i < entries_.size(); ++i )
  {
    if ( entries_[i - 1].table == entries_[i].table )
    {
      throw error( error_code::validation, "duplicate class in list for " + profile_.to_string() );
    }
  }
}

std::uint64_t profile_class_list::d_count() const noexcept
{
  std::uint64_t total = 0;
  for ( const auto& e : entries_ )
  {
    total += e.orbit_size;
  }
  return total;
}

std::uint64_t profile_class_list::trivial_stabilizer_count() const noexcept
{
  const auto group = factorial( num_vars() );
  return static_cast<std::uint64_t>( std::count_if( entries_.begin(), entries_.end(), [group]( const class_entry& e ) { return e.orbit_size == group; } ) );
}

truth_table profile_class_list::table( std::size_t i ) const
{
  return to_truth_table( entries_.at( i ).table, num_vars() );
}

class_record profile_class_list::record( std::size_t i ) const
{
  const auto& e = entries_.at( i );
  return { to_truth_table( e.table, num_vars() ), e.orbit_size, factorial( num_vars() ) / e.orbit_size };
}

truth_table to_truth_table( const detail::block<2>& table, int num_vars )
{
  check_engine_vars( num_vars );
  std::vector<std::uint64_t> words{ table[0] };
  if ( num_vars == 7 )
  {
    words.push_back( table[1] );
  }
  return truth_table::from_subset_words( num_vars, std::move( words ) );
}

detail::block<2> to_block( const truth_table& t )
{
  check_engine_vars( t.num_vars() );
  const auto words = t.subset_words();
  return { words[0], words.size() > 1 ? words[1] : 0u };
}

profile_class_list zero_profile_list( int num_vars )
{
  return profile_class_list( profile( num_vars ), { class_entry{} } );
}

profile_class_list extend_profile( const profile_class_list& base, int cardinality, unsigned jobs )
{
  const int n = base.num_vars();
  if ( cardinality < 1 || cardinality > n )
  {
    throw error( error_code::out_of_range, "set size must lie in [1, n]" );
  }
  const auto& from = base.profile_vector();
  const auto target = from.with_entry( cardinality - 1, from[cardinality - 1] + 1 );
  if ( !profile_feasible( target ) )
  {
    throw error( error_code::infeasible_profile, target.to_string() + " is not the profile of any monotone function" );
  }

  const auto ctx = make_context( n, cardinality );
  const auto base_entries = base.entries();
  const table_hash hasher{ packed_word_count( n ) };
  const auto workers = static_cast<std::size_t>( std::min<std::uint64_t>( resolve_jobs( jobs ), std::max<std::size_t>( 1u, base_entries.size() / 16u ) ) );

  std::vector<class_map> partial;
  partial.reserve( workers );
  for ( std::size_t w = 0; w < workers; ++w )
  {
    partial.emplace_back( 0, hasher );
  }
  if ( workers == 1 )
  {
    extend_range( ctx, base_entries, 0, 1, partial[0] );
  }
  else
  {
    std::vector<std::jthread> threads;
    for ( std::size_t w = 0; w < workers; ++w )
    {
      threads.emplace_back( [&, w] { extend_range( ctx, base_entries, w, workers, partial[w] ); } );
    }
  }

  class_map merged( 0, hasher );
  for ( auto& part : partial )
  {
    for ( const auto& [table, orbit] : part )
    {
      merged.emplace( table, orbit );
    }
    part.clear();
  }

  std::vector<class_entry> entries;
  entries.reserve( merged.size() );
  for ( const auto& [table, orbit] : merged )
  {
    entries.push_back( { table, orbit } );
  }
  if ( entries.empty() )
  {
    std::cerr << "mbfkit: DEFECT: feasible profile " << target.to_string() << " produced no functions\n";
  }
  return profile_class_list( target, std::move( entries ) );
}

profile_class_list seed_profile( int num_vars, int cardinality, int k, unsigned jobs )
{
  check_engine_vars( num_vars );
  if ( cardinality < 1 || cardinality > num_vars || k < 1 )
  {
    throw error( error_code::out_of_range, "seed_profile needs 1 <= i <= n and k >= 1" );
  }
  if ( static_cast<std::uint64_t>( k ) > binomial( num_vars, cardinality ) )
  {
    throw error( error_code::infeasible_profile, "k exceeds C(n, i)" );
  }
  auto list = zero_profile_list( num_vars );
  for ( int step = 0; step < k; ++step )
  {
    list = extend_profile( list, cardinality, jobs );
  }
  return list;
}

profile_class_list enumerate_profile( const profile& p, path_order order, unsigned jobs )
{
  const int n = p.num_vars();
  check_engine_vars( n );
  if ( !profile_feasible( p ) )
  {
    throw error( error_code::infeasible_profile, p.to_string() + " is not the profile of any monotone function" );
  }
  auto list = zero_profile_list( n );
  for ( int step = 0; step < n; ++step )
  {
    const int idx = order == path_order::small_sets_first ? step : n - 1 - step;
    for ( int count = 0; count < p[idx]; ++count )
    {
      list = extend_profile( list, idx + 1, jobs );
    }
  }
  return list;
}

profile_count count_profile( const profile& p, unsigned jobs )
{
  const auto list = enumerate_profile( p, path_order::small_sets_first, jobs );
  return { list.r_count(), list.d_count() };
}

const profile_result* counts_report::find( const profile& p ) const
{
  const auto it = std::lower_bound( per_profile.begin(), per_profile.end(), p, []( const profile_result& r, const profile& q ) { return r.vector < q; } );
  return it != per_profile.end() && it->vector == p ? &*it : nullptr;
}

void counts_report::write_csv( std::ostream& os, bool include_elapsed ) const
{
  os << "profile,R_count,D_count";
  if ( include_elapsed )
  {
    os << ",elapsed_seconds";
  }
  os << '\n';
  for ( const auto& r : per_profile )
  {
    os << '"' << r.vector.to_string() << "\"," << r.r_count << ',' << r.d_count;
    if ( include_elapsed )
    {
      char buf[32];
      std::snprintf( buf, sizeof buf, "%.6f", r.elapsed_seconds );
      os << ',' << buf;
    }
    os << '\n';
  }
  os << "# totals n=" << num_vars << " profiles=" << per_profile.size() << " R=" << r_total << " D=" << d_total
     << " asymmetric=" << asymmetric_total << '\n';
}

std::string counts_report::summary() const
{
  const auto n = std::to_string( num_vars );
  return "R(" + n + ")=" + std::to_string( r_total ) + " D(" + n + ")=" + std::to_string( d_total );
}

namespace
{

struct resolution
{
  profile_source source = profile_source::enumerated;
  profile partner;
};

class count_session
{
public:
  count_session( const count_options& options, std::size_t& fresh_counter )
      : options_( options ), fresh_( fresh_counter )
  {
  }

  counts_report run( int n );

private:
  void log( const std::string& message ) const
  {
    if ( options_.log )
    {
      options_.log( message );
    }
  }

  resolution resolve( const profile& p ) const;

  const count_options& options_;
  std::size_t& fresh_;
};

resolution count_session::resolve( const profile& p ) const
{
  const int n = p.num_vars();
  if ( !options_.use_shortcuts || p.is_zero() )
  {
    return {};
  }
  if ( n >= 2 && p[0] > 0 )
  {
    return { profile_source::singleton, strip_singleton( p ) };
  }
  const int idx = p.single_nonzero_index();
  if ( idx >= 0 && 2u * static_cast<std::uint64_t>( p[idx] ) > binomial( n, idx + 1 ) )
  {
    return { profile_source::complement, complement_profile( p ) };
  }
  const auto dual = reverse_dual_profile( p );
  if ( dual != p && ( dual[0] > 0 || dual < p ) )
  {
    return { profile_source::reverse_dual, dual };
  }
  return {};
}

counts_report count_session::run( int n )
{
  check_engine_vars( n );
  if ( n == kMaxEnumVars && !options_.extended )
  {
    throw error( error_code::invalid_argument, "n = 7 is a multi-week computation; enable extended mode to run it" );
  }

  const auto profiles = generate_profiles( n );

  std::optional<counts_report> smaller;
  if ( options_.use_shortcuts && n >= 2 )
  {
    smaller = run( n - 1 );
  }

  std::optional<results_db> db;
  std::filesystem::path dir;
  if ( options_.checkpoint_dir )
  {
    dir = *options_.checkpoint_dir / ( "n" + std::to_string( n ) );
    std::error_code ec;
    std::filesystem::create_directories( dir, ec );
    if ( ec )
    {
      throw error( error_code::io, "cannot create checkpoint directory " + dir.string() + ": " + ec.message() );
    }
    db.emplace( dir / "results.csv" );
  }

  std::map<profile, resolution> plan;
  for ( const auto& p : profiles )
  {
    plan.emplace( p, resolve( p ) );
  }

  // Enumerated profiles plus every ancestor on their small-sets-first path.
  std::set<profile> needed;
  for ( const auto& [p, how] : plan )
  {
    if ( how.source != profile_source::enumerated )
    {
      continue;
    }
    for ( auto q = p; needed.insert( q ).second && !q.is_zero(); )
    {
      const int last = q.last_nonzero_index();
      q = q.with_entry( last, q[last] - 1 );
    }
  }
  std::vector<profile> order( needed.begin(), needed.end() );
  std::stable_sort( order.begin(), order.end(), []( const profile& a, const profile& b ) { return a.total() < b.total(); } );

  auto parent_of = []( const profile& p ) {
    const int last = p.last_nonzero_index();
    return std::pair{ p.with_entry( last, p[last] - 1 ), last + 1 };
  };
  std::map<profile, int> pending_children;
  for ( const auto& p : order )
  {
    if ( !p.is_zero() )
    {
      ++pending_children[parent_of( p ).first];
    }
  }

  std::map<profile, profile_result> computed;
  std::map<profile, profile_class_list> live;
  for ( const auto& p : order )
  {
    const auto file = dir / profile_file_name( p );
    profile_class_list list;
    double elapsed = 0.0;
    bool loaded = false;
    if ( options_.checkpoint_dir && std::filesystem::exists( file ) )
    {
      list = load_profile_list( file, n );
      if ( list.profile_vector() != p )
      {
        throw error( error_code::validation, file.string() + " holds " + list.profile_vector().to_string() + ", expected " + p.to_string() );
      }
      if ( const auto row = db->find( n, p ) )
      {
        elapsed = row->elapsed_seconds;
      }
      loaded = true;
    }
    else
    {
      const auto start = std::chrono::steady_clock::now();
      if ( p.is_zero() )
      {
        list = zero_profile_list( n );
      }
      else
      {
        const auto [parent, cardinality] = parent_of( p );
        list = extend_profile( live.at( parent ), cardinality, options_.jobs );
      }
      elapsed = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
      if ( options_.checkpoint_dir )
      {
        save_profile_list( list, file );
      }
    }
    if ( !p.is_zero() )
    {
      const auto parent = parent_of( p ).first;
      if ( --pending_children[parent] == 0 )
      {
        live.erase( parent );
      }
    }

    computed[p] = { p, list.r_count(), list.d_count(), list.trivial_stabilizer_count(), elapsed, profile_source::enumerated };
    if ( db )
    {
      db->record( n, p, list.r_count(), list.d_count(), elapsed );
    }
    log( "n=" + std::to_string( n ) + " " + p.to_string() + " R=" + std::to_string( list.r_count() ) + ( loaded ? " (checkpoint)" : "" ) );
    if ( pending_children[p] > 0 )
    {
      live.emplace( p, std::move( list ) );
    }
    if ( !loaded && options_.stop_after && ++fresh_ >= *options_.stop_after )
    {
      throw error( error_code::interrupted, "stopped after " + std::to_string( fresh_ ) + " enumerated profiles" );
    }
  }

  // Values from the count-preserving maps.
  std::map<profile, profile_result> values;
  std::function<profile_result( const profile& )> value_of = [&]( const profile& p ) -> profile_result {
    if ( auto it = values.find( p ); it != values.end() )
    {
      return it->second;
    }
    const auto& how = plan.at( p );
    profile_result result;
    switch ( how.source )
    {
    case profile_source::enumerated:
      result = computed.at( p );
      break;
    case profile_source::singleton:
    {
      const auto* sub = smaller->find( how.partner );
      if ( sub == nullptr )
      {
        throw error( error_code::internal, "missing " + how.partner.to_string() + " in the n-1 report" );
      }
      result = *sub;
      // Choosing which a_1 variables are the singletons multiplies the labelled count by C(n, a_1) / C(n-1, a_1-1).
      result.d_count = sub->d_count * static_cast<std::uint64_t>( n ) / static_cast<std::uint64_t>( p[0] );
      result.trivial_stabilizers = p[0] == 1 ? sub->trivial_stabilizers : 0u;
      result.elapsed_seconds = 0.0;
      break;
    }
    case profile_source::complement:
    case profile_source::reverse_dual:
      result = value_of( how.partner );
      result.elapsed_seconds = 0.0;
      break;
    }
    result.vector = p;
    result.source = how.source;
    if ( const auto it = computed.find( p ); it != computed.end() && how.source != profile_source::enumerated )
    {
      const auto& direct = it->second;
      if ( direct.r_count != result.r_count || direct.d_count != result.d_count || direct.trivial_stabilizers != result.trivial_stabilizers )
      {
        throw error( error_code::result_mismatch, "enumerated and derived counts disagree for " + p.to_string() );
      }
      result.elapsed_seconds = direct.elapsed_seconds;
    }
    values.emplace( p, result );
    return result;
  };

  counts_report report;
  report.num_vars = n;
  report.r_total = 1;
  report.d_total = 1;
  std::uint64_t trivial = 0;
  for ( const auto& p : profiles )
  {
    auto r = value_of( p );
    report.r_total += r.r_count;
    report.d_total += r.d_count;
    auto& k = report.by_k[p.total()];
    k.first += r.r_count;
    k.second += r.d_count;
    trivial += r.trivial_stabilizers;
    if ( db )
    {
      db->record( n, p, r.r_count, r.d_count, r.elapsed_seconds );
    }
    report.per_profile.push_back( std::move( r ) );
  }
  report.asymmetric_total = n >= 2 ? trivial : 0u;
  return report;
}

} // namespace

counts_report count_all( int num_vars, const count_options& options )
{
  std::size_t fresh = 0;
  count_session session( options, fresh );
  return session.run( num_vars );
}

std::uint64_t count_by_minterms( const counts_report& report, int k )
{
  const auto it = report.by_k.find( k );
  return it == report.by_k.end() ? 0u : it->second.first;
}

std::uint64_t count_asymmetric( const counts_report& report )
{
  return report.asymmetric_total;
}

} // namespace mbf
