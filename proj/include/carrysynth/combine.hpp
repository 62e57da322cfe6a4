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
  \file combine.hpp
  \brief Delay-optimal binary combining trees over one associative gate

  For integer arrival times the optimal completion time of any binary tree
  is exactly ⌈log2 Σ 2^{t_i}⌉.  Two builders reach it: an interval DP on
  the inputs sorted by descending arrival (the public op), and a greedy
  minimax merge used in hot paths.  Both are deterministic.
*/

#pragma once

#include <algorithm>
#include <numeric>
#include <queue>
#include <span>
#include <vector>

#include "circuit.hpp"
#include "numeric.hpp"

namespace carrysynth
{

//! Optimal completion time of a binary combining tree, in closed form.
inline int64_t combine_tree_delay( std::span<const int64_t> arrivals )
{
  if ( arrivals.empty() )
  {
    throw std::invalid_argument( "combine_tree_delay: empty input" );
  }
  if ( arrivals.size() == 1 )
  {
    return arrivals[0];
  }
  return ceil_log2( weight_of( arrivals ) );
}

namespace detail
{

/*! \brief Interval-DP combining tree over pre-ordered items.
 *
 * Minimizes max of sub-delays + 1 at every join; ties between split points
 * broken by the smallest split index.  Returns the root node.
 */
inline node_id combine_interval_dp( circuit_builder& B, std::span<const node_id> items,
                                    std::span<const int64_t> arrivals, gate_kind op )
{
  size_t const m = items.size();
  if ( m == 1 )
  {
    return items[0];
  }
  // dp[i][j]: best delay of a tree over items i..j inclusive
  std::vector<std::vector<int64_t>> dp( m, std::vector<int64_t>( m, 0 ) );
  std::vector<std::vector<uint32_t>> cut( m, std::vector<uint32_t>( m, 0 ) );
  for ( size_t i = 0; i < m; ++i )
  {
    dp[i][i] = arrivals[i];
  }
  for ( size_t len = 2; len <= m; ++len )
  {
    for ( size_t i = 0; i + len <= m; ++i )
    {
      size_t const j = i + len - 1;
      int64_t best = INT64_MAX;
      uint32_t best_k = 0;
      for ( size_t k = i; k < j; ++k )
      {
        int64_t const d = std::max( dp[i][k], dp[k + 1][j] ) + 1;
        if ( d < best )
        {
          best = d;
          best_k = static_cast<uint32_t>( k );
        }
      }
      dp[i][j] = best;
      cut[i][j] = best_k;
    }
  }
  // materialize the chosen shape
  auto build = [&]( auto&& self, size_t i, size_t j ) -> node_id {
    if ( i == j )
    {
      return items[i];
    }
    size_t const k = cut[i][j];
    return B.add_gate( op, self( self, i, k ), self( self, k + 1, j ) );
  };
  return build( build, 0, m - 1 );
}

/*! \brief Greedy minimax merge: repeatedly join the two earliest items.
 *
 * Same optimal delay as the DP, O(m log m).  Ties broken by insertion
 * order for determinism.
 */
inline node_id combine_greedy( circuit_builder& B, std::span<const node_id> items,
                               std::span<const int64_t> arrivals, gate_kind op )
{
  size_t const m = items.size();
  if ( m == 1 )
  {
    return items[0];
  }
  using entry = std::pair<std::pair<int64_t, uint64_t>, node_id>; // ((arrival, order), node)
  std::priority_queue<entry, std::vector<entry>, std::greater<>> q;
  uint64_t order = 0;
  for ( size_t i = 0; i < m; ++i )
  {
    q.push( { { arrivals[i], order++ }, items[i] } );
  }
  while ( q.size() > 1 )
  {
    auto const a = q.top();
    q.pop();
    auto const b = q.top();
    q.pop();
    auto const v = B.add_gate( op, a.second, b.second );
    q.push( { { std::max( a.first.first, b.first.first ) + 1, order++ }, v } );
  }
  return q.top().second;
}

//! Sorts by descending arrival (stable) and runs the interval DP; on the
//! sorted order the alphabetic optimum equals the global optimum.
inline node_id combine_sorted_dp( circuit_builder& B, std::span<const node_id> items,
                                  std::span<const int64_t> arrivals, gate_kind op )
{
  size_t const m = items.size();
  std::vector<size_t> idx( m );
  std::iota( idx.begin(), idx.end(), size_t( 0 ) );
  std::stable_sort( idx.begin(), idx.end(),
                    [&]( size_t a, size_t b ) { return arrivals[a] > arrivals[b]; } );
  std::vector<node_id> sorted_items( m );
  std::vector<int64_t> sorted_arr( m );
  for ( size_t i = 0; i < m; ++i )
  {
    sorted_items[i] = items[idx[i]];
    sorted_arr[i] = arrivals[idx[i]];
  }
  return combine_interval_dp( B, sorted_items, sorted_arr, op );
}

} // namespace detail

/*! \brief Single-output AND tree over labeled inputs, delay-optimal.
 *
 * Output delay equals ⌈log2 Σ 2^{t_i}⌉ for two or more inputs; a single
 * input passes through as a wire.
 */
inline circuit delay_optimal_combine( std::span<const int64_t> arrivals )
{
  if ( arrivals.empty() )
  {
    throw std::invalid_argument( "delay_optimal_combine: empty input" );
  }
  circuit_builder B;
  std::vector<node_id> xs;
  xs.reserve( arrivals.size() );
  for ( size_t i = 0; i < arrivals.size(); ++i )
  {
    xs.push_back( B.add_input( "x" + std::to_string( i ), arrivals[i] ) );
  }
  auto const root = detail::combine_sorted_dp( B, xs, arrivals, gate_kind::AND );
  B.add_output( root, "out" );
  return B.finish();
}

} // namespace carrysynth
