/* carrysynth: delay-aware adder and prefix circuit synthesis
 * Copyright (C) 2025-2026 the carrysynth authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file adders.hpp
  \brief Adder circuit families: ripple, per-bit path, depth-recursive,
         the weight-split framework, the l-part framework, and the
         main recipes assembled from them

  An adder takes input pairs p_0,g_0,...,p_{n-1},g_{n-1} and computes all
  carry bits c_1..c_n.  No construction reads p_0 (c_1 = g_0), so the p_0
  slot of a composed instance may be absent; instances normalize
  a(p_0) = 0.  Every framework invocation records the measured delay and
  cone size of its sub-circuits so the frameworks' delay/size inequalities
  can be re-checked from the outside.
*/

#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "aop.hpp"
#include "circuit.hpp"
#include "combine.hpp"
#include "numeric.hpp"
#include "prefix.hpp"

namespace carrysynth
{

struct adder_instance
{
  uint32_t n = 0;
  std::vector<int64_t> arrival_p; //!< arrival_p[0] is forced to 0
  std::vector<int64_t> arrival_g;

  static adder_instance make( uint32_t n, std::vector<int64_t> ap, std::vector<int64_t> ag )
  {
    if ( n < 1 || ap.size() != n || ag.size() != n )
    {
      throw std::invalid_argument( "adder_instance: arrival arrays must have length n >= 1" );
    }
    ap[0] = 0;
    return { n, std::move( ap ), std::move( ag ) };
  }

  static adder_instance zeros( uint32_t n )
  {
    return make( n, std::vector<int64_t>( n, 0 ), std::vector<int64_t>( n, 0 ) );
  }

  weight_t weight() const
  {
    return weight_of( arrival_p ) + weight_of( arrival_g );
  }
};

//! Measured metrics of one sub-circuit inside a framework invocation.
struct sub_metrics
{
  int64_t delay = 0;
  int64_t size = 0;
  bool present = false;
};

/*! \brief One invocation of the weight-split adder framework. */
struct alg1_record
{
  uint32_t n = 0, k_l = 0, k_m = 0, k_r = 0;
  bool three_way = false;
  sub_metrics a_r, a_m, a_l, aop_r, aop_m, s_l, s_m;
  int64_t mid_arrival_p = 0, mid_arrival_g = 0;
  int64_t delay = 0, size = 0;
};

/*! \brief One invocation of the l-part adder framework. */
struct lpart_record
{
  uint32_t n = 0, k = 0, l = 0;
  sub_metrics a0;
  std::vector<sub_metrics> block_a;   //!< blocks 1..l-1
  std::vector<sub_metrics> block_s;   //!< blocks 1..l-1
  std::vector<sub_metrics> block_aop; //!< blocks 0..l-1
  sub_metrics b;
  int64_t b_delay_on_composed = 0; //!< measured delay of B on the composed pairs
  int64_t delay = 0, size = 0;
};

struct build_logs
{
  std::vector<alg1_record> alg1;
  std::vector<lpart_record> lpart;
  std::vector<rsw_build_record> rsw;
};

struct built_adder
{
  circuit c;
  build_logs logs;
};

enum class aop_family_kind : uint8_t
{
  standard, //!< serial chain
  delay_dp, //!< delay DP on the real arrivals
  depth_dp  //!< delay DP shaped with all-zero arrivals
};

struct prefix_family
{
  enum kind_t : uint8_t
  {
    ladner_fischer,
    rsw
  } kind = rsw;
  uint32_t lf_f = 0;
};

/*! \brief The split rule of the weight-split framework.
 *
 * k_l is the largest count of top pairs whose weight fits in half the
 * instance weight, capped at ⌊n/2⌋; the two-way case applies exactly when
 * the cap binds.  Pure function of the arrival profile.
 */
struct split_decision
{
  bool three_way = false;
  uint32_t k_l = 0, k_m = 0, k_r = 0;
};

inline split_decision compute_split_decision( std::span<const int64_t> ap,
                                              std::span<const int64_t> ag )
{
  uint32_t const n = static_cast<uint32_t>( ap.size() );
  weight_t w = 0;
  for ( auto i = 0u; i < n; ++i )
  {
    w += ( weight_t( 1 ) << static_cast<unsigned>( ap[i] ) ) +
         ( weight_t( 1 ) << static_cast<unsigned>( ag[i] ) );
  }
  split_decision d;
  weight_t top = 0;
  uint32_t m = 0;
  while ( m < n / 2 )
  {
    uint32_t const i = n - 1 - m;
    weight_t const next = top + ( weight_t( 1 ) << static_cast<unsigned>( ap[i] ) ) +
                          ( weight_t( 1 ) << static_cast<unsigned>( ag[i] ) );
    if ( 2 * next > w )
    {
      break;
    }
    top = next;
    ++m;
  }
  d.k_l = m;
  if ( m == n / 2 )
  {
    d.three_way = false;
    d.k_r = n - d.k_l;
  }
  else
  {
    d.three_way = true;
    d.k_r = n / 2;
    d.k_m = n - d.k_l - d.k_r - 1;
  }
  return d;
}

namespace detail
{

/*! \brief Shared state of one adder construction.
 *
 * `sig` is the descending signal list g_{n-1},p_{n-1},...,p_1,g_0 (p_0 is
 * never part of it); every path the construction needs is a contiguous
 * range of it, so one DP context per shaping mode serves the whole build.
 */
struct adder_env
{
  circuit_builder& B;
  std::vector<node_id> p, g;
  std::vector<node_id> sig;
  std::vector<node_id> stop; //!< cone boundary for sub-circuit measurement
  aop_dp_options dp_opt;
  build_logs* logs = nullptr;
  std::unique_ptr<aop_dp_context> dp_real_, dp_zero_;

  adder_env( circuit_builder& builder, std::vector<node_id> pv, std::vector<node_id> gv,
             build_logs* lg, aop_dp_options opt = {} )
      : B( builder ), p( std::move( pv ) ), g( std::move( gv ) ), dp_opt( opt ), logs( lg )
  {
    uint32_t const n = static_cast<uint32_t>( p.size() );
    sig.reserve( 2 * n - 1 );
    sig.push_back( g[n - 1] );
    for ( uint32_t i = n - 1; i-- > 0; )
    {
      sig.push_back( p[i + 1] );
      sig.push_back( g[i] );
    }
    stop = sig;
    if ( p[0] != null_node )
    {
      stop.push_back( p[0] );
    }
  }

  uint32_t n() const { return static_cast<uint32_t>( p.size() ); }

  //! Signal range of the carry path for pairs [lo, hi).
  std::span<const node_id> aop_range( uint32_t lo, uint32_t hi ) const
  {
    return std::span<const node_id>( sig ).subspan( 2 * ( n() - hi ), 2 * ( hi - lo ) - 1 );
  }

  aop_dp_context& dp_real()
  {
    if ( !dp_real_ )
    {
      dp_real_ = std::make_unique<aop_dp_context>( B, sig, aop_variant::g_star, false, dp_opt );
    }
    return *dp_real_;
  }

  aop_dp_context& dp_zero()
  {
    if ( !dp_zero_ )
    {
      dp_zero_ = std::make_unique<aop_dp_context>( B, sig, aop_variant::g_star, true, dp_opt );
    }
    return *dp_zero_;
  }

  node_id build_aop( aop_family_kind fam, uint32_t lo, uint32_t hi )
  {
    auto const range = aop_range( lo, hi );
    switch ( fam )
    {
    case aop_family_kind::standard:
      return build_standard_aop( B, range, aop_variant::g_star );
    case aop_family_kind::delay_dp:
      return dp_real().build_for( range );
    default:
      return dp_zero().build_for( range );
    }
  }

  std::vector<node_id> build_prefix( prefix_family fam, uint32_t lo, uint32_t hi )
  {
    std::span<const node_id> const xs( p.data() + lo, hi - lo );
    if ( fam.kind == prefix_family::ladner_fischer )
    {
      return build_lf_prefix( B, xs, fam.lf_f );
    }
    return build_rsw_prefix( B, xs, logs ? &logs->rsw : nullptr );
  }

  split_decision split( uint32_t lo, uint32_t hi ) const
  {
    std::vector<int64_t> ap, ag;
    ap.reserve( hi - lo );
    ag.reserve( hi - lo );
    for ( auto i = lo; i < hi; ++i )
    {
      ap.push_back( B.arrival( p[i] ) );
      ag.push_back( B.arrival( g[i] ) );
    }
    return compute_split_decision( ap, ag );
  }

  sub_metrics measure( std::span<const node_id> outs ) const
  {
    return { B.delay_of( outs ), B.cone_size( outs, stop ), true };
  }

  sub_metrics measure( node_id out ) const
  {
    node_id const one[1] = { out };
    return measure( std::span<const node_id>( one, 1 ) );
  }
};

inline std::vector<node_id> build_ripple( adder_env& env, uint32_t lo, uint32_t hi )
{
  std::vector<node_id> c;
  c.reserve( hi - lo );
  node_id cur = env.g[lo];
  c.push_back( cur );
  for ( auto i = lo + 1; i < hi; ++i )
  {
    cur = env.B.add_or( env.g[i], env.B.add_and( env.p[i], cur ) );
    c.push_back( cur );
  }
  return c;
}

inline std::vector<node_id> build_per_bit( adder_env& env, aop_family_kind fam, uint32_t lo,
                                           uint32_t hi )
{
  std::vector<node_id> c;
  c.reserve( hi - lo );
  for ( auto i = lo; i < hi; ++i )
  {
    c.push_back( env.build_aop( fam, lo, i + 1 ) );
  }
  return c;
}

/*! \brief Depth-recursive adder: halves plus a prefix and one carry path.
 *
 * Splits at s = ⌈n/2⌉; the lower carries come from the low half's adder,
 * each upper carry is out_i(high) ∨ (out_i(prefix) ∧ path(low)).  Shape is
 * arrival-independent (depth-targeted sub-circuits).
 */
inline std::vector<node_id> build_depth_adder( adder_env& env, uint32_t lo, uint32_t hi )
{
  uint32_t const n = hi - lo;
  if ( n <= 2 )
  {
    return build_ripple( env, lo, hi );
  }
  uint32_t const s = ( n + 1 ) / 2;
  auto low = build_depth_adder( env, lo, lo + s );
  auto const high = build_depth_adder( env, lo + s, hi );
  auto const pre = env.build_prefix( { prefix_family::ladner_fischer, 0 }, lo + s, hi );
  node_id const path = env.build_aop( aop_family_kind::depth_dp, lo, lo + s );
  for ( uint32_t j = 0; j < n - s; ++j )
  {
    low.push_back( env.B.add_or( high[j], env.B.add_and( pre[j], path ) ) );
  }
  return low;
}

struct alg1_config
{
  aop_family_kind aop = aop_family_kind::delay_dp;
  prefix_family prefix = { prefix_family::rsw, 0 };
  uint32_t ripple_max = 2;    //!< instances up to this size use the ripple chain
  uint32_t depth_max = 0;     //!< then up to this size the depth-recursive adder
};

/*! \brief Weight-split framework.
 *
 * Two-way case: P_r takes the low n-k_l pairs, P_l the top k_l, and the
 * top carries join out_i(A_l) with out_i(S_l) ∧ path(P_r).  Three-way
 * case: P_r is the low half, the pair right of P_l is handled separately,
 * and the chain through the middle reuses the join gates already built
 * for P_m's carries (structural hashing makes the reuse implicit).
 */
inline std::vector<node_id> build_alg1( adder_env& env, alg1_config const& cfg, uint32_t lo,
                                        uint32_t hi )
{
  uint32_t const n = hi - lo;
  if ( n <= cfg.ripple_max )
  {
    return build_ripple( env, lo, hi );
  }
  if ( n <= cfg.depth_max )
  {
    return build_depth_adder( env, lo, hi );
  }

  auto const d = env.split( lo, hi );
  alg1_record rec;
  rec.n = n;
  rec.k_l = d.k_l;
  rec.k_m = d.k_m;
  rec.k_r = d.k_r;
  rec.three_way = d.three_way;

  std::vector<node_id> outs;
  if ( !d.three_way )
  {
    uint32_t const rhi = lo + d.k_r;
    outs = build_alg1( env, cfg, lo, rhi );
    auto const a_l = build_alg1( env, cfg, rhi, hi );
    node_id const aop_r = env.build_aop( cfg.aop, lo, rhi );
    auto const s_l = env.build_prefix( cfg.prefix, rhi, hi );
    rec.a_r = env.measure( outs );
    rec.a_l = env.measure( a_l );
    rec.aop_r = env.measure( aop_r );
    rec.s_l = env.measure( s_l );
    for ( uint32_t i = 0; i < d.k_l; ++i )
    {
      outs.push_back( env.B.add_or( a_l[i], env.B.add_and( s_l[i], aop_r ) ) );
    }
  }
  else
  {
    uint32_t const rhi = lo + d.k_r;
    uint32_t const mhi = rhi + d.k_m;
    uint32_t const mid = mhi; // index of the separately handled pair

    outs = build_alg1( env, cfg, lo, rhi );
    rec.a_r = env.measure( outs );
    node_id const aop_r = env.build_aop( cfg.aop, lo, rhi );
    rec.aop_r = env.measure( aop_r );

    std::vector<node_id> s_m;
    node_id inner = aop_r;
    if ( d.k_m > 0 )
    {
      auto const a_m = build_alg1( env, cfg, rhi, mhi );
      s_m = env.build_prefix( cfg.prefix, rhi, mhi );
      node_id const aop_m = env.build_aop( cfg.aop, rhi, mhi );
      rec.a_m = env.measure( a_m );
      rec.s_m = env.measure( s_m );
      rec.aop_m = env.measure( aop_m );
      for ( uint32_t i = 0; i < d.k_m; ++i )
      {
        outs.push_back( env.B.add_or( a_m[i], env.B.add_and( s_m[i], aop_r ) ) );
      }
      // the join gate for i = k_m is shared with the chain below
      inner = env.B.add_or( aop_m, env.B.add_and( s_m[d.k_m - 1], aop_r ) );
    }
    rec.mid_arrival_p = env.B.arrival( env.p[mid] );
    rec.mid_arrival_g = env.B.arrival( env.g[mid] );
    node_id const mid_carry =
        env.B.add_or( env.g[mid], env.B.add_and( env.p[mid], inner ) );
    outs.push_back( mid_carry );

    if ( d.k_l > 0 )
    {
      auto const a_l = build_alg1( env, cfg, mid + 1, hi );
      auto const s_l = env.build_prefix( cfg.prefix, mid + 1, hi );
      rec.a_l = env.measure( a_l );
      rec.s_l = env.measure( s_l );
      for ( uint32_t i = 0; i < d.k_l; ++i )
      {
        outs.push_back( env.B.add_or( a_l[i], env.B.add_and( s_l[i], mid_carry ) ) );
      }
    }
  }

  rec.delay = env.B.delay_of( outs );
  rec.size = env.B.cone_size( outs, env.stop );
  if ( env.logs )
  {
    env.logs->alg1.push_back( rec );
  }
  return outs;
}

//! Builds the carries of an adder family on given signals, used for the
//! inner adder of the l-part framework (p[0] may be null).
using standalone_adder =
    std::function<std::vector<node_id>( circuit_builder&, std::vector<node_id>,
                                        std::vector<node_id>, build_logs*, aop_dp_options const& )>;

struct lpart_config
{
  uint32_t k = 1;
  aop_family_kind aop = aop_family_kind::delay_dp;
  prefix_family prefix = { prefix_family::rsw, 0 };
  //! Block adder family over [lo, hi) of the same env.
  std::function<std::vector<node_id>( adder_env&, uint32_t, uint32_t )> block_adder;
  standalone_adder inner_adder;
};

/*! \brief l-part framework with the composed inner adder.
 *
 * Partitions into l = ⌈n/k⌉ consecutive parts.  The prefix-of-blocks
 * carry paths are the carries of one inner adder B on the 2l-1 composed
 * signals (per-block path value as generate, per-block full propagate AND
 * as propagate; the first propagate slot is absent).
 */
inline std::vector<node_id> build_lpart( adder_env& env, lpart_config const& cfg )
{
  uint32_t const n = env.n();
  uint32_t const k = std::max<uint32_t>( 1, cfg.k );
  if ( k >= n )
  {
    return cfg.block_adder( env, 0, n ); // single part degeneracy
  }
  uint32_t const l = ( n + k - 1 ) / k;

  lpart_record rec;
  rec.n = n;
  rec.k = k;
  rec.l = l;

  auto part_lo = [&]( uint32_t j ) { return j * k; };
  auto part_hi = [&]( uint32_t j ) { return std::min( n, ( j + 1 ) * k ); };

  auto outs = cfg.block_adder( env, 0, part_hi( 0 ) );
  rec.a0 = env.measure( outs );

  std::vector<std::vector<node_id>> a( l ), s( l );
  std::vector<node_id> comp_p( l, null_node ), comp_g( l );
  comp_g[0] = env.build_aop( cfg.aop, 0, part_hi( 0 ) );
  rec.block_aop.push_back( env.measure( comp_g[0] ) );
  for ( uint32_t j = 1; j < l; ++j )
  {
    a[j] = cfg.block_adder( env, part_lo( j ), part_hi( j ) );
    s[j] = env.build_prefix( cfg.prefix, part_lo( j ), part_hi( j ) );
    comp_g[j] = env.build_aop( cfg.aop, part_lo( j ), part_hi( j ) );
    comp_p[j] = s[j].back();
    rec.block_a.push_back( env.measure( a[j] ) );
    rec.block_s.push_back( env.measure( s[j] ) );
    rec.block_aop.push_back( env.measure( comp_g[j] ) );
  }

  auto const b_carries = cfg.inner_adder( env.B, comp_p, comp_g, env.logs, env.dp_opt );
  {
    std::vector<node_id> boundary;
    for ( auto v : comp_p )
    {
      if ( v != null_node )
      {
        boundary.push_back( v );
      }
    }
    boundary.insert( boundary.end(), comp_g.begin(), comp_g.end() );
    rec.b = { env.B.delay_of( b_carries ), env.B.cone_size( b_carries, boundary ), true };
    rec.b_delay_on_composed = rec.b.delay;
  }

  for ( uint32_t j = 1; j < l; ++j )
  {
    for ( size_t i = 0; i < a[j].size(); ++i )
    {
      outs.push_back( env.B.add_or( a[j][i], env.B.add_and( s[j][i], b_carries[j - 1] ) ) );
    }
  }

  rec.delay = env.B.delay_of( outs );
  rec.size = env.B.cone_size( outs, env.stop );
  if ( env.logs )
  {
    env.logs->lpart.push_back( rec );
  }
  return outs;
}

inline std::pair<std::vector<node_id>, std::vector<node_id>>
make_adder_inputs( circuit_builder& B, adder_instance const& inst )
{
  std::vector<node_id> p( inst.n ), g( inst.n );
  for ( auto i = 0u; i < inst.n; ++i )
  {
    p[i] = B.add_input( "p" + std::to_string( i ), inst.arrival_p[i] );
    g[i] = B.add_input( "g" + std::to_string( i ), inst.arrival_g[i] );
  }
  return { std::move( p ), std::move( g ) };
}

template<typename Fn>
built_adder build_adder_circuit( adder_instance const& inst, aop_dp_options dp, Fn&& fn )
{
  built_adder res;
  circuit_builder B;
  auto [p, g] = make_adder_inputs( B, inst );
  adder_env env( B, std::move( p ), std::move( g ), &res.logs, dp );
  auto const carries = fn( env );
  for ( auto i = 0u; i < carries.size(); ++i )
  {
    B.add_output( carries[i], "c" + std::to_string( i + 1 ) );
  }
  res.c = B.finish();
  return res;
}

} // namespace detail

/*! \brief Serial carry chain; size and depth 2n-2. */
inline built_adder ripple_adder( adder_instance const& inst )
{
  return detail::build_adder_circuit( inst, {}, [&]( detail::adder_env& env ) {
    return detail::build_ripple( env, 0, inst.n );
  } );
}

/*! \brief One independent carry path per output; quadratic size.
 *
 * With `share_structure` off the paths are built in isolation and nothing
 * is hash-merged, which measures the naive Σ s(path_i) size.
 */
inline built_adder per_bit_aop_adder( adder_instance const& inst,
                                      aop_family_kind fam = aop_family_kind::delay_dp,
                                      aop_dp_options dp = {}, bool share_structure = true )
{
  if ( share_structure )
  {
    return detail::build_adder_circuit( inst, dp, [&]( detail::adder_env& env ) {
      return detail::build_per_bit( env, fam, 0, inst.n );
    } );
  }
  built_adder res;
  circuit_builder B( /*structural_hashing=*/false );
  auto [p, g] = detail::make_adder_inputs( B, inst );
  for ( auto i = 0u; i < inst.n; ++i )
  {
    std::vector<int64_t> t;
    for ( uint32_t j = i + 1; j-- > 0; )
    {
      t.push_back( inst.arrival_g[j] );
      if ( j > 0 )
      {
        t.push_back( inst.arrival_p[j] );
      }
    }
    aop_instance ai{ 2 * i + 1, aop_variant::g_star, std::move( t ) };
    auto const path = fam == aop_family_kind::standard ? standard_aop( ai ) : delay_aop( ai, dp );
    std::map<std::string, node_id> m;
    uint32_t idx = 0;
    for ( uint32_t j = i + 1; j-- > 0; )
    {
      m.emplace( "x" + std::to_string( idx++ ), g[j] );
      if ( j > 0 )
      {
        m.emplace( "x" + std::to_string( idx++ ), p[j] );
      }
    }
    B.add_output( B.splice( path, m ).front(), "c" + std::to_string( i + 1 ) );
  }
  res.c = B.finish();
  return res;
}

/*! \brief Depth-recursive adder; size within 6.2 n log2 n. */
inline built_adder depth_adder( adder_instance const& inst, aop_dp_options dp = {} )
{
  return detail::build_adder_circuit( inst, dp, [&]( detail::adder_env& env ) {
    return detail::build_depth_adder( env, 0, inst.n );
  } );
}

/*! \brief Weight-split framework adder with the given sub-circuit families. */
inline built_adder alg1_adder( adder_instance const& inst,
                               aop_family_kind fam = aop_family_kind::delay_dp,
                               prefix_family pre = { prefix_family::rsw, 0 },
                               aop_dp_options dp = {} )
{
  detail::alg1_config cfg;
  cfg.aop = fam;
  cfg.prefix = pre;
  return detail::build_adder_circuit( inst, dp, [&]( detail::adder_env& env ) {
    return detail::build_alg1( env, cfg, 0, inst.n );
  } );
}

struct mainthm1_options
{
  uint32_t ripple_max = 5;
  uint32_t depth_max = 374;
  aop_dp_options dp = {};
};

namespace detail
{

inline std::vector<node_id> run_mainthm1( circuit_builder& B, std::vector<node_id> p,
                                          std::vector<node_id> g, build_logs* logs,
                                          mainthm1_options const& opt )
{
  adder_env env( B, std::move( p ), std::move( g ), logs, opt.dp );
  alg1_config cfg;
  cfg.aop = aop_family_kind::delay_dp;
  cfg.prefix = { prefix_family::rsw, 0 };
  cfg.ripple_max = opt.ripple_max;
  cfg.depth_max = opt.depth_max;
  return build_alg1( env, cfg, 0, env.n() );
}

} // namespace detail

/*! \brief First main recipe: the weight-split framework with the delay
 * DP paths and the delay-driven prefix; small instances fall back per
 * the case thresholds (ripple up to ripple_max, depth-recursive up to
 * depth_max).
 */
inline built_adder recipe_mainthm1( adder_instance const& inst, mainthm1_options opt = {} )
{
  return detail::build_adder_circuit( inst, opt.dp, [&]( detail::adder_env& env ) {
    detail::alg1_config cfg;
    cfg.aop = aop_family_kind::delay_dp;
    cfg.prefix = { prefix_family::rsw, 0 };
    cfg.ripple_max = opt.ripple_max;
    cfg.depth_max = opt.depth_max;
    return detail::build_alg1( env, cfg, 0, inst.n );
  } );
}

/*! \brief Generic l-part adder: block families plus an inner adder recipe. */
struct lpart_recipe
{
  uint32_t k = 1;
  aop_family_kind aop = aop_family_kind::delay_dp;
  prefix_family prefix = { prefix_family::rsw, 0 };
  //! inner adder; defaults to the first main recipe
  detail::standalone_adder inner = {};
  aop_dp_options dp = {};
};

inline built_adder lpart_adder( adder_instance const& inst, lpart_recipe recipe )
{
  if ( recipe.k < 1 )
  {
    throw std::invalid_argument( "lpart_adder: block size must be positive" );
  }
  if ( !recipe.inner )
  {
    recipe.inner = []( circuit_builder& B, std::vector<node_id> p, std::vector<node_id> g,
                       build_logs* logs, aop_dp_options const& dp ) {
      return detail::run_mainthm1( B, std::move( p ), std::move( g ), logs, { 5, 374, dp } );
    };
  }
  return detail::build_adder_circuit( inst, recipe.dp, [&]( detail::adder_env& env ) {
    detail::lpart_config cfg;
    cfg.k = recipe.k;
    cfg.aop = recipe.aop;
    cfg.prefix = recipe.prefix;
    cfg.block_adder = []( detail::adder_env& e, uint32_t lo, uint32_t hi ) {
      return detail::build_depth_adder( e, lo, hi );
    };
    cfg.inner_adder = recipe.inner;
    return detail::build_lpart( env, cfg );
  } );
}

namespace detail
{

inline uint32_t ceil_of( double x )
{
  return static_cast<uint32_t>( std::ceil( x - 1e-9 ) );
}

} // namespace detail

struct mainthm3_options
{
  uint64_t lpart_from = ( uint64_t( 1 ) << 21 ) + 1; //!< below: depth-recursive adder
  mainthm1_options inner = {};
};

/*! \brief Second main recipe: l-part with k = ⌈log2 n⌉ blocks and the
 * first recipe as the inner adder; below the activation threshold the
 * depth-recursive adder is used directly.
 */
inline built_adder recipe_mainthm3( adder_instance const& inst, mainthm3_options opt = {} )
{
  if ( inst.n < opt.lpart_from )
  {
    return depth_adder( inst, opt.inner.dp );
  }
  lpart_recipe r;
  r.k = detail::ceil_of( std::log2( static_cast<double>( inst.n ) ) );
  r.aop = aop_family_kind::delay_dp;
  r.prefix = { prefix_family::rsw, 0 };
  r.dp = opt.inner.dp;
  r.inner = [opt]( circuit_builder& B, std::vector<node_id> p, std::vector<node_id> g,
                   build_logs* logs, aop_dp_options const& dp ) {
    auto o = opt.inner;
    o.dp = dp;
    return detail::run_mainthm1( B, std::move( p ), std::move( g ), logs, o );
  };
  return lpart_adder( inst, std::move( r ) );
}

struct mainthm5_options
{
  uint64_t lpart_from = ( uint64_t( 1 ) << 16 ) + 1;
  mainthm1_options inner = {};
};

/*! \brief Third main recipe: k = ⌈log2² n⌉ blocks. */
inline built_adder recipe_mainthm5( adder_instance const& inst, mainthm5_options opt = {} )
{
  if ( inst.n < opt.lpart_from )
  {
    return depth_adder( inst, opt.inner.dp );
  }
  double const lg = std::log2( static_cast<double>( inst.n ) );
  lpart_recipe r;
  r.k = detail::ceil_of( lg * lg );
  r.aop = aop_family_kind::delay_dp;
  r.prefix = { prefix_family::rsw, 0 };
  r.dp = opt.inner.dp;
  r.inner = [opt]( circuit_builder& B, std::vector<node_id> p, std::vector<node_id> g,
                   build_logs* logs, aop_dp_options const& dp ) {
    auto o = opt.inner;
    o.dp = dp;
    return detail::run_mainthm1( B, std::move( p ), std::move( g ), logs, o );
  };
  return lpart_adder( inst, std::move( r ) );
}

struct mainthm6_options
{
  uint64_t lpart_from = ( uint64_t( 1 ) << 28 ) + 1;
  mainthm5_options inner = {};
};

/*! \brief Linear-size recipe: k = ⌈log2 log2 n⌉ blocks, Ladner–Fischer
 * prefixes, the third recipe as the inner adder.
 */
inline built_adder recipe_mainthm6( adder_instance const& inst, mainthm6_options opt = {} )
{
  if ( inst.n < opt.lpart_from )
  {
    return depth_adder( inst, opt.inner.inner.dp );
  }
  double const lg = std::log2( static_cast<double>( inst.n ) );
  lpart_recipe r;
  r.k = std::max<uint32_t>( 2, detail::ceil_of( std::log2( lg ) ) );
  r.aop = aop_family_kind::delay_dp;
  r.prefix = { prefix_family::ladner_fischer, 0 };
  r.dp = opt.inner.inner.dp;
  r.inner = [opt]( circuit_builder& B, std::vector<node_id> p, std::vector<node_id> g,
                   build_logs* logs, aop_dp_options const& dp ) {
    // inner recipe on the composed pairs
    uint32_t const l = static_cast<uint32_t>( p.size() );
    auto o = opt.inner;
    o.inner.dp = dp;
    detail::adder_env env( B, std::move( p ), std::move( g ), logs, dp );
    if ( l < o.lpart_from )
    {
      return detail::build_depth_adder( env, 0, l );
    }
    // above the inner threshold: one more l-part level with k = ⌈log2² l⌉
    double const lgl = std::log2( static_cast<double>( l ) );
    detail::lpart_config cfg;
    cfg.k = detail::ceil_of( lgl * lgl );
    cfg.aop = aop_family_kind::delay_dp;
    cfg.prefix = { prefix_family::rsw, 0 };
    cfg.block_adder = []( detail::adder_env& e, uint32_t lo, uint32_t hi ) {
      return detail::build_depth_adder( e, lo, hi );
    };
    cfg.inner_adder = [o]( circuit_builder& B2, std::vector<node_id> p2, std::vector<node_id> g2,
                           build_logs* logs2, aop_dp_options const& dp2 ) {
      auto m1 = o.inner;
      m1.dp = dp2;
      return detail::run_mainthm1( B2, std::move( p2 ), std::move( g2 ), logs2, m1 );
    };
    return detail::build_lpart( env, cfg );
  };
  return lpart_adder( inst, std::move( r ) );
}

namespace detail
{

inline std::vector<node_id> run_iterated( circuit_builder& B, std::vector<node_id> p,
                                          std::vector<node_id> g, build_logs* logs,
                                          aop_dp_options const& dp, uint32_t level,
                                          mainthm5_options const& m5 );

inline std::vector<node_id> run_m5_like( circuit_builder& B, std::vector<node_id> p,
                                         std::vector<node_id> g, build_logs* logs,
                                         aop_dp_options const& dp, mainthm5_options const& m5 )
{
  uint32_t const n = static_cast<uint32_t>( p.size() );
  adder_env env( B, std::move( p ), std::move( g ), logs, dp );
  if ( n < m5.lpart_from )
  {
    return build_depth_adder( env, 0, n );
  }
  double const lg = std::log2( static_cast<double>( n ) );
  lpart_config cfg;
  cfg.k = ceil_of( lg * lg );
  cfg.aop = aop_family_kind::delay_dp;
  cfg.prefix = { prefix_family::rsw, 0 };
  cfg.block_adder = []( adder_env& e, uint32_t lo, uint32_t hi ) {
    return build_depth_adder( e, lo, hi );
  };
  cfg.inner_adder = [m5]( circuit_builder& B2, std::vector<node_id> p2, std::vector<node_id> g2,
                          build_logs* logs2, aop_dp_options const& dp2 ) {
    auto o = m5.inner;
    o.dp = dp2;
    return run_mainthm1( B2, std::move( p2 ), std::move( g2 ), logs2, o );
  };
  return build_lpart( env, cfg );
}

inline std::vector<node_id> run_iterated( circuit_builder& B, std::vector<node_id> p,
                                          std::vector<node_id> g, build_logs* logs,
                                          aop_dp_options const& dp, uint32_t level,
                                          mainthm5_options const& m5 )
{
  uint32_t const n = static_cast<uint32_t>( p.size() );
  if ( level <= 2 )
  {
    return run_m5_like( B, std::move( p ), std::move( g ), logs, dp, m5 );
  }
  double scale;
  try
  {
    scale = iterated_log2( static_cast<double>( n ), level - 1 );
  }
  catch ( std::domain_error const& )
  {
    scale = 0.0;
  }
  uint32_t const k = scale >= 2.0 ? ceil_of( scale ) : 0;
  if ( k < 2 || k >= n ) // iteration bottomed out for this n
  {
    return run_iterated( B, std::move( p ), std::move( g ), logs, dp, level - 1, m5 );
  }
  adder_env env( B, std::move( p ), std::move( g ), logs, dp );
  lpart_config cfg;
  cfg.k = k;
  cfg.aop = aop_family_kind::delay_dp;
  cfg.prefix = { prefix_family::rsw, 0 };
  cfg.block_adder = []( adder_env& e, uint32_t lo, uint32_t hi ) {
    return build_depth_adder( e, lo, hi );
  };
  cfg.inner_adder = [level, m5]( circuit_builder& B2, std::vector<node_id> p2,
                                 std::vector<node_id> g2, build_logs* logs2,
                                 aop_dp_options const& dp2 ) {
    return run_iterated( B2, std::move( p2 ), std::move( g2 ), logs2, dp2, level - 1, m5 );
  };
  return build_lpart( env, cfg );
}

} // namespace detail

struct iterated_options
{
  bool linear_final = false; //!< add a final l-part pass with linear block components
  mainthm5_options base = {};
  aop_dp_options dp = {};
};

/*! \brief Iterated l-part recipe: level t uses block size ⌈log2^{(t-1)} n⌉
 * with the previous level as the inner adder, bottoming out at the
 * O(n log log n) recipe for j = 2.  Iteration stops early when the block
 * size degenerates below 2.
 */
inline built_adder recipe_iterated( adder_instance const& inst, uint32_t j,
                                    iterated_options opt = {} )
{
  if ( j < 2 )
  {
    throw std::invalid_argument( "recipe_iterated: j must be at least 2" );
  }
  return detail::build_adder_circuit( inst, opt.dp, [&]( detail::adder_env& env ) {
    if ( !opt.linear_final )
    {
      return detail::run_iterated( env.B, env.p, env.g, env.logs, env.dp_opt, j, opt.base );
    }
    // final linearization pass: Ladner–Fischer prefixes and depth-recursive
    // blocks around the level-j adder
    double scale;
    try
    {
      scale = iterated_log2( static_cast<double>( inst.n ), j );
    }
    catch ( std::domain_error const& )
    {
      scale = 0.0;
    }
    uint32_t const k = scale >= 2.0 ? detail::ceil_of( scale ) : 0;
    if ( k < 2 || k >= inst.n )
    {
      return detail::run_iterated( env.B, env.p, env.g, env.logs, env.dp_opt, j, opt.base );
    }
    detail::lpart_config cfg;
    cfg.k = k;
    cfg.aop = aop_family_kind::delay_dp;
    cfg.prefix = { prefix_family::ladner_fischer, 0 };
    cfg.block_adder = []( detail::adder_env& e, uint32_t lo, uint32_t hi ) {
      return detail::build_depth_adder( e, lo, hi );
    };
    cfg.inner_adder = [j, opt]( circuit_builder& B2, std::vector<node_id> p2,
                                std::vector<node_id> g2, build_logs* logs2,
                                aop_dp_options const& dp2 ) {
      return detail::run_iterated( B2, std::move( p2 ), std::move( g2 ), logs2, dp2, j,
                                   opt.base );
    };
    return detail::build_lpart( env, cfg );
  } );
}

/*! \brief Non-monotone wrapper computing the full sum s_0..s_n from bit
 * operands a and b around a monotone adder core.
 *
 * Front layer: g_i = a_i ∧ b_i, p_i = a_i ⊕ b_i.  Back layer: s_0 = p_0,
 * s_i = c_i ⊕ p_i, s_n = c_n.  Adds exactly 3n-1 gates around the core.
 */
inline circuit full_adder_wrap( circuit const& core, std::span<const int64_t> arrival_a = {},
                                std::span<const int64_t> arrival_b = {} )
{
  uint32_t const n = core.num_inputs() / 2;
  if ( n < 1 || core.num_inputs() != 2 * n || core.outputs().size() != n )
  {
    throw std::invalid_argument( "full_adder_wrap: core is not an adder on n pairs" );
  }
  circuit_builder B;
  std::vector<node_id> av( n ), bv( n ), pv( n ), gv( n );
  for ( auto i = 0u; i < n; ++i )
  {
    av[i] = B.add_input( "a" + std::to_string( i ),
                         arrival_a.empty() ? 0 : arrival_a[i] );
    bv[i] = B.add_input( "b" + std::to_string( i ),
                         arrival_b.empty() ? 0 : arrival_b[i] );
  }
  std::map<std::string, node_id> input_map;
  for ( auto i = 0u; i < n; ++i )
  {
    gv[i] = B.add_and( av[i], bv[i] );
    pv[i] = B.add_xor( av[i], bv[i] );
    input_map.emplace( "p" + std::to_string( i ), pv[i] );
    input_map.emplace( "g" + std::to_string( i ), gv[i] );
  }
  auto const carries = B.splice( core, input_map );
  B.add_output( pv[0], "s0" );
  for ( auto i = 1u; i < n; ++i )
  {
    B.add_output( B.add_xor( carries[i - 1], pv[i] ), "s" + std::to_string( i ) );
  }
  B.add_output( carries[n - 1], "s" + std::to_string( n ) );
  return B.finish();
}

} // namespace carrysynth
