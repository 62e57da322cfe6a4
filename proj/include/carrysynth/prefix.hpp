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
  \file prefix.hpp
  \brief AND-prefix circuits: Ladner–Fischer and the delay-driven
         square-root decomposition

  Prefix circuit builders compute out_i = x_0 ∧ ... ∧ x_{i-1} for all i.
  ladner_fischer trades depth for size via the budget parameter f; the
  delay-driven builder (rsw_prefix) targets delay log2 W + 3 log2 log2 n
  under per-input arrival times.
*/

#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "circuit.hpp"
#include "combine.hpp"
#include "numeric.hpp"

namespace carrysynth
{

/*! \brief One recorded invocation of the square-root recursion.
 *
 * Fields are measured values of the sub-builds; the recursion's delay and
 * size inequalities are re-checked against them in the test suites.
 */
struct rsw_build_record
{
  uint32_t n = 0;            //!< inputs of this invocation
  uint32_t parts = 0;        //!< l = ⌈√n⌉
  weight_t weight = 0;       //!< Σ 2^{t_i} over this invocation's inputs
  int64_t max_y_arrival = 0; //!< latest part-total (Step 2 output)
  int64_t step4_delay = 0;
  int64_t step4_size = 0;
  int64_t max_step3_delay = 0;
  int64_t max_sub_size = 0; //!< max over Step 3 and Step 4 sub-build sizes
  int64_t delay = 0;
  int64_t size = 0;
};

//! Part sizes n_1 ≥ ... ≥ n_l with l = ⌈√n⌉, n_1 - n_l ≤ 1, Σ n_i = n.
inline std::vector<uint32_t> rsw_partition( uint32_t n )
{
  if ( n < 2 )
  {
    throw std::invalid_argument( "rsw_partition: n must be at least 2" );
  }
  auto l = static_cast<uint32_t>( std::ceil( std::sqrt( static_cast<double>( n ) ) ) );
  while ( l * l < n ) // guard against float rounding
  {
    ++l;
  }
  while ( ( l - 1 ) * ( l - 1 ) >= n )
  {
    --l;
  }
  uint32_t const q = n / l, r = n % l;
  std::vector<uint32_t> sizes( l, q );
  for ( auto i = 0u; i < r; ++i )
  {
    ++sizes[i];
  }
  return sizes;
}

namespace detail
{

inline std::vector<int64_t> arrivals_of( circuit_builder const& B, std::span<const node_id> xs )
{
  std::vector<int64_t> t;
  t.reserve( xs.size() );
  for ( auto v : xs )
  {
    t.push_back( B.arrival( v ) );
  }
  return t;
}

/*! \brief Ladner–Fischer recursion.
 *
 * f = 0 splits in halves, the left half built with budget 1 so that the
 * combine gates on the right stay within depth ⌈log2 n⌉.  f ≥ 1 pairs
 * adjacent inputs, recurses with budget f-1 on the pair signals, and fixes
 * up the odd prefix lengths with one gate each.
 */
inline std::vector<node_id> build_lf_prefix( circuit_builder& B, std::span<const node_id> xs,
                                             uint32_t f )
{
  size_t const n = xs.size();
  std::vector<node_id> out( n );
  if ( n == 1 )
  {
    out[0] = xs[0];
    return out;
  }
  if ( f == 0 )
  {
    size_t const h = ( n + 1 ) / 2;
    auto const left = build_lf_prefix( B, xs.subspan( 0, h ), 1 );
    auto const right = build_lf_prefix( B, xs.subspan( h ), 0 );
    for ( size_t i = 0; i < h; ++i )
    {
      out[i] = left[i];
    }
    for ( size_t j = 0; j < n - h; ++j )
    {
      out[h + j] = B.add_and( left[h - 1], right[j] );
    }
    return out;
  }

  size_t const half = ( n + 1 ) / 2;
  std::vector<node_id> pairs( half );
  for ( size_t j = 0; j < n / 2; ++j )
  {
    pairs[j] = B.add_and( xs[2 * j], xs[2 * j + 1] );
  }
  if ( n % 2 == 1 )
  {
    pairs[half - 1] = xs[n - 1];
  }
  auto const inner = build_lf_prefix( B, pairs, f - 1 );
  out[0] = xs[0];
  for ( size_t len = 2; len <= n; ++len )
  {
    if ( len % 2 == 0 )
    {
      out[len - 1] = inner[len / 2 - 1];
    }
    else if ( len == n )
    {
      out[len - 1] = inner[half - 1]; // odd n: the last pair signal is x_{n-1} itself
    }
    else
    {
      out[len - 1] = B.add_and( inner[( len - 1 ) / 2 - 1], xs[len - 1] );
    }
  }
  return out;
}

/*! \brief Delay-driven prefix recursion (square-root decomposition).
 *
 * Step 1 partitions into l = ⌈√n⌉ near-equal parts; Step 2 builds a
 * delay-optimal combine tree per part; Step 3 recurses within each part
 * on all but its last input; Step 4 recurses on the part totals
 * y_1..y_{l-1} at their measured arrival times; Steps 5 and 6 join with
 * one gate per remaining prefix.
 */
inline std::vector<node_id> build_rsw_prefix( circuit_builder& B, std::span<const node_id> xs,
                                              std::vector<rsw_build_record>* log = nullptr )
{
  size_t const n = xs.size();
  std::vector<node_id> out( n );
  if ( n == 1 )
  {
    out[0] = xs[0];
    return out;
  }
  if ( n == 2 )
  {
    out[0] = xs[0];
    out[1] = B.add_and( xs[0], xs[1] );
    return out;
  }

  auto const sizes = rsw_partition( static_cast<uint32_t>( n ) );
  uint32_t const l = static_cast<uint32_t>( sizes.size() );

  // Step 2: per-part totals
  std::vector<node_id> y( l );
  std::vector<uint32_t> base( l );
  {
    uint32_t off = 0;
    for ( auto i = 0u; i < l; ++i )
    {
      base[i] = off;
      auto const part = xs.subspan( off, sizes[i] );
      auto const t = arrivals_of( B, part );
      y[i] = combine_sorted_dp( B, part, t, gate_kind::AND );
      off += sizes[i];
    }
  }

  // Step 3: within-part prefixes on all but the last input
  std::vector<std::vector<node_id>> inner( l );
  int64_t max_step3_delay = 0, max_sub_size = 0;
  for ( auto i = 0u; i < l; ++i )
  {
    if ( sizes[i] >= 2 )
    {
      auto const part_head = xs.subspan( base[i], sizes[i] - 1 );
      inner[i] = build_rsw_prefix( B, part_head, log );
      max_step3_delay = std::max( max_step3_delay, B.delay_of( inner[i] ) );
      max_sub_size = std::max( max_sub_size, B.cone_size( inner[i], xs ) );
    }
  }

  // Step 4: prefixes over the part totals y_1..y_{l-1}
  std::vector<node_id> z;
  int64_t step4_delay = 0, step4_size = 0;
  if ( l >= 2 )
  {
    std::span<const node_id> const ys( y.data(), l - 1 );
    z = build_rsw_prefix( B, ys, log );
    step4_delay = B.delay_of( z );
    step4_size = B.cone_size( z, ys );
    max_sub_size = std::max( max_sub_size, step4_size );
  }

  // Steps 5 and 6: one joining gate per remaining prefix
  for ( auto i = 0u; i < l; ++i )
  {
    for ( uint32_t j = 0; j + 1 < sizes[i]; ++j )
    {
      out[base[i] + j] = i == 0 ? inner[i][j] : B.add_and( z[i - 1], inner[i][j] );
    }
    uint32_t const last = base[i] + sizes[i] - 1;
    if ( i == 0 )
    {
      out[last] = y[0];
    }
    else if ( i < l - 1 )
    {
      out[last] = z[i];
    }
    else
    {
      out[last] = B.add_and( z[i - 1], y[i] );
    }
  }

  if ( log )
  {
    rsw_build_record rec;
    rec.n = static_cast<uint32_t>( n );
    rec.parts = l;
    auto const t = arrivals_of( B, xs );
    rec.weight = weight_of( t );
    for ( auto v : y )
    {
      rec.max_y_arrival = std::max( rec.max_y_arrival, B.arrival( v ) );
    }
    rec.step4_delay = step4_delay;
    rec.step4_size = step4_size;
    rec.max_step3_delay = max_step3_delay;
    rec.max_sub_size = max_sub_size;
    rec.delay = B.delay_of( out );
    rec.size = B.cone_size( out, xs );
    log->push_back( rec );
  }
  return out;
}

} // namespace detail

/*! \brief AND-prefix circuit with depth ≤ ⌈log2 n⌉ + f and size ≤ 2(1+2^{-f})n.
 *
 * Inputs are labeled x0..x_{n-1}; outputs out1..outn.
 */
inline circuit ladner_fischer( uint32_t n, uint32_t f )
{
  if ( n < 1 )
  {
    throw std::invalid_argument( "ladner_fischer: n must be positive" );
  }
  uint32_t const logn = n <= 1 ? 0 : static_cast<uint32_t>( ceil_log2( weight_t( n ) ) );
  if ( f > logn )
  {
    throw std::invalid_argument( "ladner_fischer: f out of range [0, ceil(log2 n)]" );
  }
  circuit_builder B;
  std::vector<node_id> xs;
  xs.reserve( n );
  for ( auto i = 0u; i < n; ++i )
  {
    xs.push_back( B.add_input( "x" + std::to_string( i ) ) );
  }
  auto const outs = detail::build_lf_prefix( B, xs, f );
  for ( auto i = 0u; i < n; ++i )
  {
    B.add_output( outs[i], "out" + std::to_string( i + 1 ) );
  }
  return B.finish();
}

struct rsw_result
{
  circuit c;
  std::vector<rsw_build_record> log; //!< one record per recursive invocation
};

/*! \brief Delay-driven AND-prefix circuit under arrival times.
 *
 * For n ≥ 3 and integral arrivals: delay ≤ log2 W + 3 log2 log2 n + 0.007
 * and size ≤ 3.114 n log2 log2 n.
 */
inline rsw_result rsw_prefix( std::span<const int64_t> arrivals )
{
  if ( arrivals.empty() )
  {
    throw std::invalid_argument( "rsw_prefix: n must be positive" );
  }
  rsw_result res;
  circuit_builder B;
  std::vector<node_id> xs;
  xs.reserve( arrivals.size() );
  for ( size_t i = 0; i < arrivals.size(); ++i )
  {
    xs.push_back( B.add_input( "x" + std::to_string( i ), arrivals[i] ) );
  }
  auto const outs = detail::build_rsw_prefix( B, xs, &res.log );
  for ( size_t i = 0; i < outs.size(); ++i )
  {
    B.add_output( outs[i], "out" + std::to_string( i + 1 ) );
  }
  res.c = B.finish();
  return res;
}

} // namespace carrysynth
