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
  \file aop.hpp
  \brief And-Or path circuits: the serial chain, the alternating split, and
         a delay-driven dynamic program over split points

  An And-Or path alternates one-gate levels over x_0..x_{m-1}.  The
  alternating split decomposes it, for any odd k, into the same path on
  x_0..x_{k-1}, a combining tree over x_1,x_3,...,x_k, and the path on
  x_{k+1}..x_{m-1}, joined by two gates.  The DP picks k per contiguous
  range to minimize delay under the inputs' arrival times, memoized on
  ranges of one shared signal list so that adder constructions reuse
  overlapping paths.
*/

#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "circuit.hpp"
#include "combine.hpp"
#include "numeric.hpp"

namespace carrysynth
{

struct aop_instance
{
  uint32_t m = 0;
  aop_variant variant = aop_variant::g_star;
  std::vector<int64_t> arrivals; //!< may be empty (all zero)

  std::vector<int64_t> arrivals_or_zero() const
  {
    if ( !arrivals.empty() )
    {
      return arrivals;
    }
    return std::vector<int64_t>( m, 0 );
  }
};

struct aop_dp_options
{
  //! Ranges longer than this are split at the middle odd k instead of by DP.
  uint32_t exact_cap = 1024;
  //! Memo budget; the effective cap shrinks to fit long signal lists.
  uint64_t memo_budget_bytes = 192ull << 20;
};

namespace detail
{

struct gate_set
{
  gate_kind pair_op, tree_op, inner_op, outer_op;
};

inline gate_set gates_for( aop_variant v )
{
  if ( v == aop_variant::g_star )
  {
    return { gate_kind::OR, gate_kind::AND, gate_kind::AND, gate_kind::OR };
  }
  return { gate_kind::AND, gate_kind::OR, gate_kind::OR, gate_kind::AND };
}

/*! \brief Memoized delay DP over contiguous ranges of one signal list.
 *
 * Ranges always start at generate-parity positions, so the memo is banded
 * on (start/2, length).  Shapes can be driven by the real builder arrivals
 * or by all-zero arrivals (depth-targeted construction); the builder keeps
 * measuring real arrivals either way.
 */
class aop_dp_context
{
public:
  aop_dp_context( circuit_builder& B, std::vector<node_id> signals, aop_variant variant,
                  bool zero_arrivals, aop_dp_options opt = {} )
      : B_( B ), sig_( std::move( signals ) ), gs_( gates_for( variant ) ), opt_( opt )
  {
    uint32_t const m = static_cast<uint32_t>( sig_.size() );
    arr_.resize( m );
    for ( auto i = 0u; i < m; ++i )
    {
      arr_[i] = zero_arrivals ? 0 : B_.arrival( sig_[i] );
      index_.emplace( sig_[i], i );
    }
    pw_[0].assign( m + 1, 0 );
    pw_[1].assign( m + 1, 0 );
    for ( auto i = 0u; i < m; ++i )
    {
      weight_t const w = weight_t( 1 ) << static_cast<unsigned>( arr_[i] );
      pw_[0][i + 1] = pw_[0][i] + ( i % 2 == 0 ? w : 0 );
      pw_[1][i + 1] = pw_[1][i] + ( i % 2 == 1 ? w : 0 );
    }
    cap_ = opt_.exact_cap;
    uint64_t const rows = m / 2 + 1;
    while ( cap_ > 64 && rows * cap_ * sizeof( entry ) > opt_.memo_budget_bytes )
    {
      cap_ /= 2;
    }
    band_.assign( rows * cap_, entry{} );
  }

  aop_dp_context( aop_dp_context const& ) = delete;
  aop_dp_context& operator=( aop_dp_context const& ) = delete;

  //! Realizes the path on signals [s, e) and returns its output node.
  node_id build( uint32_t s, uint32_t e )
  {
    auto& en = compute( s, e );
    if ( en.built != null_node )
    {
      return en.built;
    }
    uint32_t const m = e - s;
    node_id v;
    if ( m == 1 )
    {
      v = sig_[s];
    }
    else if ( m == 2 )
    {
      v = B_.add_gate( gs_.pair_op, sig_[s], sig_[s + 1] );
    }
    else
    {
      uint32_t const k = static_cast<uint32_t>( en.split );
      node_id const left = build( s, s + k );
      node_id const tree = build_tree( s, k );
      if ( k == m - 1 )
      {
        v = B_.add_gate( gs_.outer_op, left, tree );
      }
      else
      {
        node_id const right = build( s + k + 1, e );
        node_id const inner = B_.add_gate( gs_.inner_op, tree, right );
        v = B_.add_gate( gs_.outer_op, left, inner );
      }
    }
    // compute() may rehash; re-resolve the slot before writing
    slot( s, e ).built = v;
    return v;
  }

  //! Realizes the path on a contiguous sub-span of the context's list.
  node_id build_for( std::span<const node_id> range )
  {
    auto const it = index_.find( range.front() );
    if ( it == index_.end() )
    {
      throw std::logic_error( "aop_dp_context: signal not in context" );
    }
    uint32_t const s = it->second;
    for ( size_t i = 0; i < range.size(); ++i )
    {
      if ( s + i >= sig_.size() || sig_[s + i] != range[i] )
      {
        throw std::logic_error( "aop_dp_context: range is not contiguous in context" );
      }
    }
    return build( s, s + static_cast<uint32_t>( range.size() ) );
  }

  int64_t planned_delay( uint32_t s, uint32_t e ) { return compute( s, e ).delay; }

private:
  struct entry
  {
    int64_t delay = 0;
    int64_t size = 0;
    int32_t split = -1; //!< -1: not computed
    node_id built = null_node;
  };

  entry& slot( uint32_t s, uint32_t e )
  {
    uint32_t const len = e - s;
    if ( len <= cap_ )
    {
      return band_[uint64_t( s / 2 ) * cap_ + ( len - 1 )];
    }
    return sparse_[uint64_t( s ) << 32 | e];
  }

  int64_t tree_delay( uint32_t s, uint32_t k ) const
  {
    unsigned const q = ( s + 1 ) % 2;
    weight_t const w = pw_[q][s + k + 1] - pw_[q][s + 1];
    return ceil_log2( w );
  }

  node_id build_tree( uint32_t s, uint32_t k )
  {
    std::vector<node_id> items;
    std::vector<int64_t> shaped;
    items.reserve( ( k + 1 ) / 2 );
    for ( uint32_t i = s + 1; i <= s + k; i += 2 )
    {
      items.push_back( sig_[i] );
      shaped.push_back( arr_[i] );
    }
    return combine_greedy( B_, items, shaped, gs_.tree_op );
  }

  entry& compute( uint32_t s, uint32_t e )
  {
    {
      auto& en = slot( s, e );
      if ( en.split != -1 )
      {
        return en;
      }
    }
    uint32_t const m = e - s;
    entry en;
    if ( m == 1 )
    {
      en = { arr_[s], 0, 0, null_node };
    }
    else if ( m == 2 )
    {
      en = { std::max( arr_[s], arr_[s + 1] ) + 1, 1, 0, null_node };
    }
    else if ( m > cap_ )
    {
      uint32_t k = ( m / 2 ) | 1u;
      if ( k >= m )
      {
        k -= 2;
      }
      en = candidate( s, e, k );
    }
    else
    {
      for ( uint32_t k = 1; k < m; k += 2 )
      {
        entry const c = candidate( s, e, k );
        if ( en.split == -1 || c.delay < en.delay ||
             ( c.delay == en.delay && c.size < en.size ) )
        {
          en = c;
        }
      }
    }
    auto& ref = slot( s, e );
    ref = en;
    return ref;
  }

  entry candidate( uint32_t s, uint32_t e, uint32_t k )
  {
    uint32_t const m = e - s;
    int64_t const dl = compute( s, s + k ).delay;
    int64_t const sl = slot( s, s + k ).size;
    int64_t const dt = tree_delay( s, k );
    int64_t const tree_sz = ( k + 1 ) / 2 - 1;
    entry c;
    c.split = static_cast<int32_t>( k );
    if ( k == m - 1 )
    {
      c.delay = 1 + std::max( dl, dt );
      c.size = sl + tree_sz + 1;
    }
    else
    {
      int64_t const dr = compute( s + k + 1, e ).delay;
      int64_t const sr = slot( s + k + 1, e ).size;
      c.delay = 1 + std::max( dl, 1 + std::max( dt, dr ) );
      c.size = sl + sr + tree_sz + 2;
    }
    return c;
  }

  circuit_builder& B_;
  std::vector<node_id> sig_;
  std::vector<int64_t> arr_;
  std::unordered_map<node_id, uint32_t> index_;
  std::vector<weight_t> pw_[2];
  gate_set gs_;
  aop_dp_options opt_;
  uint32_t cap_;
  std::vector<entry> band_;
  std::unordered_map<uint64_t, entry> sparse_;
};

//! Serial chain realization: m-1 gates, depth m-1.
inline node_id build_standard_aop( circuit_builder& B, std::span<const node_id> xs, aop_variant v )
{
  size_t const m = xs.size();
  node_id acc = xs[m - 1];
  if ( m >= 2 )
  {
    for ( size_t i = m - 1; i-- > 0; )
    {
      bool const or_here = ( v == aop_variant::g_star ) == ( i % 2 == 0 );
      acc = B.add_gate( or_here ? gate_kind::OR : gate_kind::AND, xs[i], acc );
    }
  }
  return acc;
}

} // namespace detail

namespace detail
{

inline std::vector<node_id> make_aop_inputs( circuit_builder& B, aop_instance const& inst )
{
  if ( inst.m < 1 )
  {
    throw std::invalid_argument( "aop: m must be positive" );
  }
  auto const t = inst.arrivals_or_zero();
  if ( t.size() != inst.m )
  {
    throw std::invalid_argument( "aop: arrival count does not match m" );
  }
  std::vector<node_id> xs;
  xs.reserve( inst.m );
  for ( auto i = 0u; i < inst.m; ++i )
  {
    xs.push_back( B.add_input( "x" + std::to_string( i ), t[i] ) );
  }
  return xs;
}

} // namespace detail

/*! \brief Standard serial And-Or path circuit (m-1 gates, depth m-1). */
inline circuit standard_aop( aop_instance const& inst )
{
  circuit_builder B;
  auto const xs = detail::make_aop_inputs( B, inst );
  B.add_output( detail::build_standard_aop( B, xs, inst.variant ), "out" );
  return B.finish();
}

/*! \brief Joins given sub-circuits via the alternating split at odd k.
 *
 * `left` must realize the same variant on x_0..x_{k-1} (its own inputs
 * being x0..x_{k-1} of that length), `right` on x_{k+1}..x_{m-1}, and
 * `tree` the combining gate over x_1,x_3,...,x_k (an AND tree for g*, an
 * OR tree for g).  For k = m-1 the right part is empty and must be null.
 */
inline circuit split_aop( aop_instance const& inst, uint32_t k, circuit const& left,
                          circuit const* right, circuit const& tree )
{
  if ( k % 2 == 0 || k < 1 || k >= inst.m )
  {
    throw std::invalid_argument( "split_aop: k must be odd and in [1, m)" );
  }
  bool const tail = ( k == inst.m - 1 );
  if ( tail != ( right == nullptr ) )
  {
    throw std::invalid_argument( "split_aop: right part must be given exactly when k < m-1" );
  }
  if ( left.num_inputs() != k || tree.num_inputs() != ( k + 1 ) / 2 ||
       ( right && right->num_inputs() != inst.m - k - 1 ) )
  {
    throw std::invalid_argument( "split_aop: sub-circuit arity mismatch" );
  }
  circuit_builder B;
  auto const xs = detail::make_aop_inputs( B, inst );

  auto map_onto = [&]( circuit const& sub, uint32_t base, uint32_t stride ) {
    std::map<std::string, node_id> m;
    for ( auto i = 0u; i < sub.num_inputs(); ++i )
    {
      m.emplace( sub.input_label( i ), xs[base + stride * i] );
    }
    return B.splice( sub, m ).front();
  };

  auto const gs = detail::gates_for( inst.variant );
  node_id const l = map_onto( left, 0, 1 );
  node_id const t = map_onto( tree, 1, 2 );
  node_id out;
  if ( tail )
  {
    out = B.add_gate( gs.outer_op, l, t );
  }
  else
  {
    node_id const r = map_onto( *right, k + 1, 1 );
    out = B.add_gate( gs.outer_op, l, B.add_gate( gs.inner_op, t, r ) );
  }
  B.add_output( out, "out" );
  return B.finish();
}

/*! \brief Delay-driven And-Or path circuit.
 *
 * Recursive choice over odd split points, memoized on contiguous ranges;
 * combining trees are delay-optimal.  Result delay is at least ⌈log2 W⌉
 * and the circuit equals the path function on all assignments.
 */
inline circuit delay_aop( aop_instance const& inst, aop_dp_options opt = {} )
{
  circuit_builder B;
  auto const xs = detail::make_aop_inputs( B, inst );
  detail::aop_dp_context ctx( B, xs, inst.variant, /*zero_arrivals=*/false, opt );
  B.add_output( ctx.build( 0, inst.m ), "out" );
  return B.finish();
}

/*! \brief Depth-targeted variant: the delay DP with all arrivals zero. */
inline circuit depth_aop( uint32_t m, aop_variant variant, aop_dp_options opt = {} )
{
  return delay_aop( { m, variant, {} }, opt );
}

} // namespace carrysynth
