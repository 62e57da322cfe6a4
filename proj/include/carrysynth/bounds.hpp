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
  \file bounds.hpp
  \brief Weight, delay lower bounds, closed-form bound evaluators, and the
         side-by-side bound report

  Lower bounds and weights use exact integer arithmetic; closed-form
  bounds are real-valued and compared against integral measured metrics,
  so no epsilon is involved.  Each closed-form entry carries a tier:
  `required` bounds are assertion-level, `monitored` bounds depend on the
  substituted carry-path circuits and are reported with their slack,
  `informational` entries have no constant to check against.
*/

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "adders.hpp"
#include "circuit.hpp"
#include "numeric.hpp"

namespace carrysynth
{

/*! \brief W = Σ 2^{a(x_i)} over all inputs of a circuit. */
inline weight_t weight( circuit const& c, arrival_profile const& a )
{
  auto const t = c.arrivals_for( a );
  return weight_of( t );
}

//! Delay lower bound for a path/prefix circuit depending on all inputs.
inline int64_t lower_bound_aop( weight_t w )
{
  if ( w < 2 )
  {
    throw std::invalid_argument( "lower_bound_aop: weight must be at least 2" );
  }
  return ceil_log2( w );
}

//! Delay lower bound for an adder on pairs with a(p_0) = 0.
inline int64_t lower_bound_adder( weight_t w )
{
  if ( w < 2 )
  {
    throw std::invalid_argument( "lower_bound_adder: weight must be at least 2" );
  }
  return ceil_log2( w - 1 );
}

enum class bound_tier : uint8_t
{
  required,
  monitored,
  informational
};

inline const char* to_string( bound_tier t )
{
  switch ( t )
  {
  case bound_tier::required:
    return "required";
  case bound_tier::monitored:
    return "monitored";
  default:
    return "informational";
  }
}

struct bound_entry
{
  std::string name;       //!< e.g. "delay" or "size"
  bound_tier tier = bound_tier::monitored;
  double bound = 0.0;
  int64_t measured = 0;
  double slack = 0.0; //!< bound - measured
  bool satisfied = false;
};

struct formula_bounds
{
  std::optional<double> delay; //!< absent when no delay form applies
  std::optional<double> size;
  std::optional<double> depth; //!< arrival-independent depth form, when one exists
  bound_tier tier = bound_tier::monitored;
};

/*! \brief Closed-form bound values for a named construction.
 *
 * `param` is the family parameter where one exists (f for the
 * depth-budgeted prefix, j for the iterated recipe).  Throws
 * std::domain_error when n is outside the formula's validity range.
 * Which formulas are required versus monitored is data, not code: the
 * tier rides along in the result.
 */
inline formula_bounds bound_formula( std::string const& name, uint64_t n, weight_t w,
                                     uint32_t param = 0 )
{
  if ( n < 1 )
  {
    throw std::domain_error( "bound_formula: n must be positive" );
  }
  double const dn = static_cast<double>( n );
  double const lw = log2_real( w );
  auto ll = [&]( int k ) { return iterated_log2( dn, static_cast<unsigned>( k ) ); };

  formula_bounds fb;
  if ( name == "ripple" )
  {
    fb.tier = bound_tier::required;
    fb.size = n >= 2 ? 2.0 * dn - 2.0 : 0.0;
    fb.depth = fb.size;
    return fb;
  }
  if ( name == "lf" )
  {
    fb.tier = bound_tier::required;
    double const clog = n == 1 ? 0.0 : std::ceil( std::log2( dn ) - 1e-9 );
    fb.depth = clog + param;
    fb.delay = lw + clog + param;
    fb.size = 2.0 * ( 1.0 + std::pow( 2.0, -double( param ) ) ) * dn;
    return fb;
  }
  if ( name == "rsw" )
  {
    if ( n < 3 )
    {
      throw std::domain_error( "bound_formula: rsw form needs n >= 3" );
    }
    fb.tier = bound_tier::required;
    fb.delay = lw + 3.0 * ll( 2 ) + 0.007;
    fb.size = 3.114 * dn * ll( 2 );
    return fb;
  }
  if ( name == "depth_adder" )
  {
    if ( n < 3 )
    {
      throw std::domain_error( "bound_formula: depth_adder form needs n >= 3" );
    }
    fb.tier = bound_tier::monitored;
    fb.depth = ll( 1 ) + ll( 2 ) + 2.65;
    fb.delay = lw + ll( 1 ) + ll( 2 ) + 2.65;
    fb.size = 6.2 * dn * ll( 1 );
    return fb;
  }
  if ( name == "mainthm1" )
  {
    if ( n < 3 )
    {
      throw std::domain_error( "bound_formula: mainthm1 form needs n >= 3" );
    }
    fb.tier = bound_tier::monitored;
    fb.delay = lw + 3.0 * ll( 2 ) + 5.007;
    fb.size = 2.422 * dn * ll( 1 ) * ll( 1 );
    return fb;
  }
  if ( name == "mainthm3" )
  {
    if ( n < 3 )
    {
      throw std::domain_error( "bound_formula: mainthm3 form needs n >= 3" );
    }
    fb.tier = bound_tier::monitored;
    bool const low = n <= ( uint64_t( 1 ) << 21 );
    fb.delay = lw + 3.0 * ll( 2 ) + 3.0 * ll( 3 ) + ( low ? 8.461 : 9.067 );
    fb.size = ( low ? 6.2 : 4.442 ) * dn * ll( 1 );
    return fb;
  }
  if ( name == "mainthm5" )
  {
    if ( n < 3 )
    {
      throw std::domain_error( "bound_formula: mainthm5 form needs n >= 3" );
    }
    fb.tier = bound_tier::monitored;
    fb.delay = lw + 3.0 * ll( 2 ) + 3.0 * ll( 3 ) + 11.085;
    fb.size = 24.436 * dn * ll( 2 );
    return fb;
  }
  if ( name == "mainthm6" )
  {
    if ( n < 3 )
    {
      throw std::domain_error( "bound_formula: mainthm6 form needs n >= 3" );
    }
    fb.tier = bound_tier::monitored;
    fb.delay = lw + 3.0 * ll( 2 ) + 4.0 * ll( 3 ) + 18.596;
    fb.size = 53.877 * dn;
    return fb;
  }
  if ( name == "iterated" )
  {
    uint32_t const j = param;
    if ( j < 2 )
    {
      throw std::domain_error( "bound_formula: iterated form needs j >= 2" );
    }
    fb.tier = bound_tier::informational;
    double d = lw;
    for ( auto i = 2u; i <= j + 1; ++i )
    {
      d += 3.0 * ll( static_cast<int>( i ) ); // constant-free
    }
    fb.delay = d;
    fb.size = dn * ll( static_cast<int>( j ) ); // scale only, no constant
    return fb;
  }
  throw std::domain_error( "bound_formula: unknown formula name: " + name );
}

struct structural_bound
{
  int64_t delay = 0;
  int64_t size = 0;
};

/*! \brief Delay/size bound of one weight-split invocation from its
 * recorded sub-circuit metrics.
 *
 * Two-way: max{del(A_r), del(A_l)+1, del(AOP_r)+2, del(S_l)+2} and the
 * size sum plus 2 k_l.  Three-way: the nine-term max including the middle
 * pair's arrival terms, and the size sum plus 2 k_m + 2 k_l + 3.
 */
inline structural_bound structural_bound_alg1( alg1_record const& r )
{
  structural_bound b;
  auto acc_delay = [&]( sub_metrics const& m, int64_t add ) {
    if ( m.present )
    {
      b.delay = std::max( b.delay, m.delay + add );
    }
  };
  auto acc_size = [&]( sub_metrics const& m ) {
    if ( m.present )
    {
      b.size += m.size;
    }
  };
  if ( !r.three_way )
  {
    acc_delay( r.a_r, 0 );
    acc_delay( r.a_l, 1 );
    acc_delay( r.aop_r, 2 );
    acc_delay( r.s_l, 2 );
    acc_size( r.a_r );
    acc_size( r.a_l );
    acc_size( r.aop_r );
    acc_size( r.s_l );
    b.size += 2 * r.k_l;
    return b;
  }
  acc_delay( r.a_r, 0 );
  acc_delay( r.a_m, 1 );
  acc_delay( r.a_l, 1 );
  b.delay = std::max( b.delay, r.mid_arrival_g + 3 );
  b.delay = std::max( b.delay, r.mid_arrival_p + 4 );
  acc_delay( r.aop_m, 5 );
  acc_delay( r.aop_r, 6 );
  acc_delay( r.s_l, 2 );
  acc_delay( r.s_m, 6 );
  acc_size( r.a_r );
  acc_size( r.a_m );
  acc_size( r.a_l );
  acc_size( r.aop_r );
  acc_size( r.aop_m );
  acc_size( r.s_m );
  acc_size( r.s_l );
  b.size += 2 * r.k_m + 2 * r.k_l + 3;
  return b;
}

/*! \brief Delay/size bound of one l-part invocation: delay is
 * max{del(A^0), del(B on composed)+2, max_j{del(A^j)+1, del(S^j)+2}},
 * size the sum of all sub-circuit sizes plus 2n.
 */
inline structural_bound structural_bound_alg2( lpart_record const& r )
{
  structural_bound b;
  b.delay = r.a0.delay;
  if ( !r.b.present ) // single-part degeneracy: everything reduces to A^0
  {
    b.size = r.a0.size;
    return b;
  }
  b.delay = std::max( b.delay, r.b_delay_on_composed + 2 );
  for ( auto const& m : r.block_a )
  {
    b.delay = std::max( b.delay, m.delay + 1 );
  }
  for ( auto const& m : r.block_s )
  {
    b.delay = std::max( b.delay, m.delay + 2 );
  }
  b.size = r.a0.size + r.b.size + 2 * int64_t( r.n );
  for ( auto const& m : r.block_a )
  {
    b.size += m.size;
  }
  for ( auto const& m : r.block_s )
  {
    b.size += m.size;
  }
  for ( auto const& m : r.block_aop )
  {
    b.size += m.size;
  }
  return b;
}

/*! \brief Measured-sub-metrics form of the square-root prefix recursion. */
inline structural_bound structural_bound_rsw( rsw_build_record const& r )
{
  structural_bound b;
  b.delay = 1 + std::max( { r.step4_delay, r.max_step3_delay, r.max_y_arrival } );
  b.size = int64_t( r.parts + 1 ) * r.max_sub_size + 2 * ( int64_t( r.n ) - r.parts );
  return b;
}

struct structural_entry
{
  std::string framework; //!< "alg1", "lpart", or "rsw"
  uint32_t n = 0;
  int64_t delay = 0, delay_bound = 0;
  int64_t size = 0, size_bound = 0;
  bool satisfied = false;
};

/*! \brief Side-by-side of measured metrics, lower bound, closed-form
 * bounds, and the per-invocation structural bounds of a build.
 */
struct bound_report
{
  std::string recipe;
  uint64_t n = 0;
  weight_t w = 0;
  metrics measured;
  std::string lower_bound_kind; //!< "adder" or "path"
  int64_t lower_bound = 0;
  bool lower_bound_ok = false;
  std::vector<bound_entry> formulas;
  std::vector<structural_entry> structural;

  bool all_required_ok() const
  {
    if ( !lower_bound_ok )
    {
      return false;
    }
    for ( auto const& f : formulas )
    {
      if ( f.tier == bound_tier::required && !f.satisfied )
      {
        return false;
      }
    }
    for ( auto const& s : structural )
    {
      if ( !s.satisfied )
      {
        return false;
      }
    }
    return true;
  }
};

namespace detail
{

inline void push_formula_entries( bound_report& rep, formula_bounds const& fb, metrics const& m,
                                  bool arrivals_all_zero )
{
  auto push = [&]( std::string name, double bound, int64_t measured ) {
    bound_entry e;
    e.name = std::move( name );
    e.tier = fb.tier;
    e.bound = bound;
    e.measured = measured;
    e.slack = bound - static_cast<double>( measured );
    e.satisfied = e.slack >= 0.0;
    rep.formulas.push_back( e );
  };
  if ( fb.delay )
  {
    push( "delay", *fb.delay, m.delay );
  }
  if ( fb.depth && arrivals_all_zero )
  {
    push( "depth", *fb.depth, m.depth );
  }
  if ( fb.size )
  {
    push( "size", *fb.size, m.size );
  }
}

} // namespace detail

/*! \brief Assembles the report for a circuit built by a known recipe.
 *
 * `formula_name` selects the closed-form family ("" for none); build logs
 * supply the structural entries.  The lower bound kind follows the
 * output shape: n-pair adders check ⌈log2(W-1)⌉, everything else ⌈log2 W⌉.
 */
inline bound_report make_report( circuit const& c, arrival_profile const& a,
                                 std::string const& recipe, std::string const& formula_name,
                                 build_logs const* logs = nullptr, uint32_t param = 0,
                                 bool is_adder = true )
{
  bound_report rep;
  rep.recipe = recipe;
  rep.measured = compute_metrics( c, a );
  rep.w = weight( c, a );
  rep.n = is_adder ? c.num_inputs() / 2 : c.num_inputs();
  rep.lower_bound_kind = is_adder ? "adder" : "path";
  rep.lower_bound = is_adder ? lower_bound_adder( rep.w ) : lower_bound_aop( rep.w );
  rep.lower_bound_ok = rep.measured.delay >= rep.lower_bound;

  auto const t = c.arrivals_for( a );
  bool all_zero = true;
  for ( auto v : t )
  {
    all_zero &= ( v == 0 );
  }

  if ( !formula_name.empty() )
  {
    try
    {
      detail::push_formula_entries( rep, bound_formula( formula_name, rep.n, rep.w, param ),
                                    rep.measured, all_zero );
    }
    catch ( std::domain_error const& )
    {
      // n outside the formula's validity range: no closed-form entries
    }
  }

  if ( logs )
  {
    for ( auto const& r : logs->alg1 )
    {
      auto const b = structural_bound_alg1( r );
      rep.structural.push_back( { "alg1", r.n, r.delay, b.delay, r.size, b.size,
                                  r.delay <= b.delay && r.size <= b.size } );
    }
    for ( auto const& r : logs->lpart )
    {
      auto const b = structural_bound_alg2( r );
      rep.structural.push_back( { "lpart", r.n, r.delay, b.delay, r.size, b.size,
                                  r.delay <= b.delay && r.size <= b.size } );
    }
    for ( auto const& r : logs->rsw )
    {
      if ( r.n < 3 )
      {
        continue;
      }
      auto const b = structural_bound_rsw( r );
      rep.structural.push_back( { "rsw", r.n, r.delay, b.delay, r.size, b.size,
                                  r.delay <= b.delay && r.size <= b.size } );
    }
  }
  return rep;
}

} // namespace carrysynth
