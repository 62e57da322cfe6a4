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
  \file oracle.hpp
  \brief Ground-truth semantics and brute-force equivalence checking

  The oracles are the definitions themselves, evaluated 64 assignments at
  a time.  p and g are independent free bits: the constructions never use
  the hardware-side constraint ¬(p_i ∧ g_i), so they are checked without it.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "circuit.hpp"

namespace carrysynth
{

/*! \brief Carry bits c_1..c_n from c_{i+1} = g_i ∨ (p_i ∧ c_i), c_0 = 0. */
inline std::vector<uint64_t> carry_bits_ref( std::span<const uint64_t> p, std::span<const uint64_t> g )
{
  if ( p.size() != g.size() || p.empty() )
  {
    throw std::invalid_argument( "carry_bits_ref: p and g must have equal non-zero length" );
  }
  std::vector<uint64_t> c( p.size() );
  uint64_t carry = 0;
  for ( size_t i = 0; i < p.size(); ++i )
  {
    carry = g[i] | ( p[i] & carry );
    c[i] = carry;
  }
  return c;
}

/*! \brief And-Or path value on x_0, ..., x_{m-1}. */
inline uint64_t aop_ref( std::span<const uint64_t> x, aop_variant variant )
{
  if ( x.empty() )
  {
    throw std::invalid_argument( "aop_ref: empty input" );
  }
  // evaluate the chain bottom-up
  uint64_t acc = x.back();
  if ( x.size() >= 2 )
  {
    for ( size_t i = x.size() - 1; i-- > 0; )
    {
      bool const or_here = ( variant == aop_variant::g_star ) == ( i % 2 == 0 );
      acc = or_here ? ( x[i] | acc ) : ( x[i] & acc );
    }
  }
  return acc;
}

/*! \brief out_i = x_0 ∧ ... ∧ x_{i-1} for i = 1..n. */
inline std::vector<uint64_t> and_prefix_ref( std::span<const uint64_t> x )
{
  if ( x.empty() )
  {
    throw std::invalid_argument( "and_prefix_ref: empty input" );
  }
  std::vector<uint64_t> out( x.size() );
  uint64_t acc = ~uint64_t( 0 );
  for ( size_t i = 0; i < x.size(); ++i )
  {
    acc &= x[i];
    out[i] = acc;
  }
  return out;
}

/*! \brief (n+1)-bit sum of two n-bit numbers, also cross-checkable against
 * carry_bits_ref via p_i = a_i ⊕ b_i, g_i = a_i ∧ b_i.
 */
inline uint64_t sum_ref( uint64_t a, uint64_t b, unsigned n )
{
  if ( n >= 63 || a >= ( uint64_t( 1 ) << n ) || b >= ( uint64_t( 1 ) << n ) )
  {
    throw std::invalid_argument( "sum_ref: operands do not fit in n bits" );
  }
  return a + b;
}

//! Bitwise sum on packed lanes: a and b given bit-sliced, returns n+1 slices.
inline std::vector<uint64_t> sum_bits_ref( std::span<const uint64_t> a, std::span<const uint64_t> b )
{
  if ( a.size() != b.size() || a.empty() )
  {
    throw std::invalid_argument( "sum_bits_ref: a and b must have equal non-zero length" );
  }
  size_t const n = a.size();
  std::vector<uint64_t> p( n ), g( n );
  for ( size_t i = 0; i < n; ++i )
  {
    p[i] = a[i] ^ b[i];
    g[i] = a[i] & b[i];
  }
  auto const c = carry_bits_ref( p, g );
  std::vector<uint64_t> s( n + 1 );
  s[0] = p[0];
  for ( size_t i = 1; i < n; ++i )
  {
    s[i] = c[i - 1] ^ p[i];
  }
  s[n] = c[n - 1];
  return s;
}

//! A packed oracle maps input slices (one word per circuit input, in the
//! circuit's input order) to output slices (one word per circuit output).
using packed_oracle = std::function<std::vector<uint64_t>( std::span<const uint64_t> )>;

//! Carry oracle for a circuit with inputs p0,g0,...,p_{n-1},g_{n-1}.
inline packed_oracle carry_oracle( uint32_t n )
{
  return [n]( std::span<const uint64_t> in ) {
    std::vector<uint64_t> p( n ), g( n );
    for ( auto i = 0u; i < n; ++i )
    {
      p[i] = in[2 * i];
      g[i] = in[2 * i + 1];
    }
    return carry_bits_ref( p, g );
  };
}

inline packed_oracle and_prefix_oracle()
{
  return []( std::span<const uint64_t> in ) { return and_prefix_ref( in ); };
}

inline packed_oracle aop_oracle( aop_variant variant )
{
  return [variant]( std::span<const uint64_t> in ) {
    return std::vector<uint64_t>{ aop_ref( in, variant ) };
  };
}

//! Sum oracle for a wrapped adder with inputs a0,b0,...,a_{n-1},b_{n-1}.
inline packed_oracle sum_oracle( uint32_t n )
{
  return [n]( std::span<const uint64_t> in ) {
    std::vector<uint64_t> a( n ), b( n );
    for ( auto i = 0u; i < n; ++i )
    {
      a[i] = in[2 * i];
      b[i] = in[2 * i + 1];
    }
    return sum_bits_ref( a, b );
  };
}

struct equivalence_options
{
  uint32_t exhaustive_bit_cap = 20; //!< beyond this many free bits, sample
  uint32_t random_samples = 10000;
  uint64_t seed = 1;
  bool force_random = false;
};

struct mismatch_witness
{
  std::vector<bool> assignment; //!< by circuit input index
  uint32_t output_index;
};

struct equivalence_verdict
{
  bool equivalent = false;
  bool exhaustive = false;
  uint64_t assignments_checked = 0;
  uint64_t seed = 0;
  std::optional<mismatch_witness> witness;
};

namespace detail
{

inline std::optional<mismatch_witness> compare_block( circuit const& c, packed_oracle const& oracle,
                                                      std::span<const uint64_t> words, unsigned lanes )
{
  auto const got = evaluate_words( c, words );
  auto const want = oracle( words );
  if ( got.size() != want.size() )
  {
    throw std::invalid_argument( "check_equivalence: oracle arity mismatch (outputs)" );
  }
  uint64_t const lane_mask = lanes >= 64 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << lanes ) - 1 );
  for ( uint32_t o = 0; o < got.size(); ++o )
  {
    uint64_t const diff = ( got[o] ^ want[o] ) & lane_mask;
    if ( diff != 0 )
    {
      unsigned const lane = static_cast<unsigned>( __builtin_ctzll( diff ) );
      mismatch_witness w;
      w.output_index = o;
      w.assignment.resize( words.size() );
      for ( size_t i = 0; i < words.size(); ++i )
      {
        w.assignment[i] = ( words[i] >> lane ) & 1u;
      }
      return w;
    }
  }
  return std::nullopt;
}

} // namespace detail

/*! \brief Compares a circuit against a packed oracle.
 *
 * Exhaustive when the circuit has at most `exhaustive_bit_cap` inputs
 * (~1M evaluations at the default cap); otherwise seeded uniform samples
 * plus the all-zeros, all-ones, and single-hot corner patterns.
 */
inline equivalence_verdict check_equivalence( circuit const& c, packed_oracle const& oracle,
                                              equivalence_options const& opt = {} )
{
  uint32_t const k = c.num_inputs();
  if ( k == 0 )
  {
    throw std::invalid_argument( "check_equivalence: circuit has no inputs" );
  }
  equivalence_verdict v;
  v.seed = opt.seed;

  std::vector<uint64_t> words( k );
  if ( !opt.force_random && k <= opt.exhaustive_bit_cap )
  {
    v.exhaustive = true;
    uint64_t const total = uint64_t( 1 ) << k;
    for ( uint64_t base = 0; base < total; base += 64 )
    {
      unsigned const lanes = static_cast<unsigned>( std::min<uint64_t>( 64, total - base ) );
      for ( uint32_t i = 0; i < k; ++i )
      {
        if ( i < 6 )
        {
          // the low 6 assignment bits vary across lanes
          static constexpr uint64_t patterns[6] = {
              0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
              0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };
          words[i] = patterns[i];
        }
        else
        {
          words[i] = ( ( base >> i ) & 1u ) ? ~uint64_t( 0 ) : 0;
        }
      }
      v.assignments_checked += lanes;
      if ( auto w = detail::compare_block( c, oracle, words, lanes ) )
      {
        v.witness = std::move( w );
        return v;
      }
    }
    v.equivalent = true;
    return v;
  }

  // corner patterns: all-zeros, all-ones, every single-hot assignment
  auto run_block = [&]( unsigned lanes ) -> bool {
    v.assignments_checked += lanes;
    if ( auto w = detail::compare_block( c, oracle, words, lanes ) )
    {
      v.witness = std::move( w );
      return false;
    }
    return true;
  };

  for ( uint32_t hot_base = 0; hot_base < k + 2; hot_base += 64 )
  {
    unsigned const lanes = static_cast<unsigned>( std::min<uint32_t>( 64, k + 2 - hot_base ) );
    for ( uint32_t i = 0; i < k; ++i )
    {
      uint64_t w = 0;
      for ( unsigned lane = 0; lane < lanes; ++lane )
      {
        uint32_t const pattern = hot_base + lane;
        bool bit;
        if ( pattern == 0 )
        {
          bit = false;
        }
        else if ( pattern == 1 )
        {
          bit = true;
        }
        else
        {
          bit = ( pattern - 2 == i );
        }
        w |= uint64_t( bit ) << lane;
      }
      words[i] = w;
    }
    if ( !run_block( lanes ) )
    {
      return v;
    }
  }

  std::mt19937_64 rng( opt.seed );
  uint64_t remaining = opt.random_samples;
  while ( remaining > 0 )
  {
    unsigned const lanes = static_cast<unsigned>( std::min<uint64_t>( 64, remaining ) );
    for ( uint32_t i = 0; i < k; ++i )
    {
      words[i] = rng();
    }
    remaining -= lanes;
    if ( !run_block( lanes ) )
    {
      return v;
    }
  }
  v.equivalent = true;
  return v;
}

} // namespace carrysynth
