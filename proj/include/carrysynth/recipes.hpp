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
  \file recipes.hpp
  \brief Named construction recipes addressable from the CLI and bench
*/

#pragma once

#include <string>

#include "adders.hpp"
#include "aop.hpp"
#include "bounds.hpp"
#include "netlist.hpp"
#include "oracle.hpp"
#include "prefix.hpp"

namespace carrysynth
{

struct recipe_build
{
  circuit c;
  build_logs logs;
  std::string formula;       //!< bound_formula family name, "" when none applies
  uint32_t formula_param = 0;
  bool is_adder = true;      //!< pair instance (vs flat path/prefix instance)
  std::string oracle;        //!< "carry", "prefix", "aop-g", "aop-gstar", "sum"
};

inline std::vector<std::string> recipe_names()
{
  return { "ripple",   "per-bit",  "depth-adder", "alg1",       "lpart:<k>",
           "mainthm1", "mainthm3", "mainthm5",    "mainthm6",   "iterated:<j>",
           "iterated-linear:<j>",  "full:<adder-recipe>",       "lf:<f>",
           "rsw-prefix", "standard-aop", "standard-aop-g", "delay-aop", "delay-aop-g" };
}

inline packed_oracle oracle_by_name( std::string const& name, uint32_t n )
{
  if ( name == "carry" )
  {
    return carry_oracle( n );
  }
  if ( name == "prefix" )
  {
    return and_prefix_oracle();
  }
  if ( name == "aop-g" )
  {
    return aop_oracle( aop_variant::g );
  }
  if ( name == "aop-gstar" )
  {
    return aop_oracle( aop_variant::g_star );
  }
  if ( name == "sum" )
  {
    return sum_oracle( n );
  }
  throw std::invalid_argument( "unknown oracle: " + name );
}

/*! \brief Builds the named recipe on a profile.
 *
 * Adder recipes take pair-form profiles; path/prefix recipes take the
 * flat form.  Parameterized names use a ":<value>" suffix.
 */
inline recipe_build run_recipe( std::string const& name, profile_file const& pf )
{
  std::string base = name;
  uint32_t param = 0;
  if ( auto const c = name.find( ':' ); c != std::string::npos )
  {
    base = name.substr( 0, c );
    auto const rest = name.substr( c + 1 );
    if ( base != "full" )
    {
      param = static_cast<uint32_t>( std::stoul( rest ) );
    }
    else
    {
      base = name; // handled below with the inner recipe name intact
    }
  }

  recipe_build rb;
  auto pair_inst = [&]() {
    if ( !pf.is_pair_form() )
    {
      throw std::invalid_argument( "recipe " + name + " needs a pair-form profile" );
    }
    return adder_instance::make( pf.n, pf.p, pf.g );
  };
  auto flat_arr = [&]() {
    if ( pf.is_pair_form() || pf.flat.size() != pf.n )
    {
      std::vector<int64_t> z( pf.n, 0 );
      if ( !pf.flat.empty() || pf.is_pair_form() )
      {
        throw std::invalid_argument( "recipe " + name + " needs a flat profile" );
      }
      return z;
    }
    return pf.flat;
  };

  auto adopt = [&]( built_adder ba, std::string formula ) {
    rb.c = std::move( ba.c );
    rb.logs = std::move( ba.logs );
    rb.formula = std::move( formula );
    rb.is_adder = true;
    rb.oracle = "carry";
  };

  if ( base == "ripple" )
  {
    adopt( ripple_adder( pair_inst() ), "ripple" );
  }
  else if ( base == "per-bit" )
  {
    adopt( per_bit_aop_adder( pair_inst() ), "" );
  }
  else if ( base == "depth-adder" )
  {
    adopt( depth_adder( pair_inst() ), "depth_adder" );
  }
  else if ( base == "alg1" )
  {
    adopt( alg1_adder( pair_inst() ), "" );
  }
  else if ( base == "lpart" )
  {
    lpart_recipe r;
    r.k = std::max<uint32_t>( 1, param );
    adopt( lpart_adder( pair_inst(), std::move( r ) ), "" );
  }
  else if ( base == "mainthm1" )
  {
    adopt( recipe_mainthm1( pair_inst() ), "mainthm1" );
  }
  else if ( base == "mainthm3" )
  {
    adopt( recipe_mainthm3( pair_inst() ), "mainthm3" );
  }
  else if ( base == "mainthm5" )
  {
    adopt( recipe_mainthm5( pair_inst() ), "mainthm5" );
  }
  else if ( base == "mainthm6" )
  {
    adopt( recipe_mainthm6( pair_inst() ), "mainthm6" );
  }
  else if ( base == "iterated" )
  {
    adopt( recipe_iterated( pair_inst(), param ), "iterated" );
    rb.formula_param = param;
  }
  else if ( base == "iterated-linear" )
  {
    iterated_options o;
    o.linear_final = true;
    adopt( recipe_iterated( pair_inst(), param, o ), "" );
  }
  else if ( base.rfind( "full:", 0 ) == 0 )
  {
    auto inner = run_recipe( base.substr( 5 ), pf );
    if ( !inner.is_adder || inner.oracle != "carry" )
    {
      throw std::invalid_argument( "full: inner recipe must be an adder recipe" );
    }
    auto const inst = pair_inst();
    rb.c = full_adder_wrap( inner.c, inst.arrival_p, inst.arrival_g );
    rb.logs = std::move( inner.logs );
    rb.formula = "";
    rb.is_adder = true;
    rb.oracle = "sum";
  }
  else if ( base == "lf" )
  {
    rb.c = ladner_fischer( pf.n, param );
    rb.formula = "lf";
    rb.formula_param = param;
    rb.is_adder = false;
    rb.oracle = "prefix";
    (void)flat_arr(); // lf is arrival-independent but the profile must still be flat
  }
  else if ( base == "rsw-prefix" )
  {
    auto res = rsw_prefix( flat_arr() );
    rb.c = std::move( res.c );
    rb.logs.rsw = std::move( res.log );
    rb.formula = "rsw";
    rb.is_adder = false;
    rb.oracle = "prefix";
  }
  else if ( base == "standard-aop" || base == "standard-aop-g" )
  {
    auto const v = base == "standard-aop" ? aop_variant::g_star : aop_variant::g;
    rb.c = standard_aop( { pf.n, v, flat_arr() } );
    rb.is_adder = false;
    rb.oracle = v == aop_variant::g_star ? "aop-gstar" : "aop-g";
  }
  else if ( base == "delay-aop" || base == "delay-aop-g" )
  {
    auto const v = base == "delay-aop" ? aop_variant::g_star : aop_variant::g;
    rb.c = delay_aop( { pf.n, v, flat_arr() } );
    rb.is_adder = false;
    rb.oracle = v == aop_variant::g_star ? "aop-gstar" : "aop-g";
  }
  else
  {
    throw std::invalid_argument( "unknown recipe: " + name );
  }
  if ( rb.formula_param == 0 )
  {
    rb.formula_param = param;
  }
  return rb;
}

//! The label-keyed profile matching a build's input order.
inline arrival_profile profile_for( recipe_build const& rb, profile_file const& pf )
{
  arrival_profile a;
  if ( rb.oracle == "sum" )
  {
    for ( auto i = 0u; i < pf.n; ++i )
    {
      a.times["a" + std::to_string( i )] = pf.p[i];
      a.times["b" + std::to_string( i )] = pf.g[i];
    }
  }
  else if ( rb.is_adder )
  {
    for ( auto i = 0u; i < pf.n; ++i )
    {
      a.times["p" + std::to_string( i )] = i == 0 ? 0 : pf.p[i];
      a.times["g" + std::to_string( i )] = pf.g[i];
    }
  }
  else
  {
    for ( auto i = 0u; i < pf.n; ++i )
    {
      a.times["x" + std::to_string( i )] = pf.flat.empty() ? 0 : pf.flat[i];
    }
  }
  return a;
}

} // namespace carrysynth
