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
  \file numeric.hpp
  \brief Wide-integer weights and exact/real logarithm helpers
*/

#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace carrysynth
{

/*! \brief Unsigned 128-bit weight type.
 *
 * Weights are sums of powers of two of input arrival times and overflow
 * 64 bits quickly; 128 bits cover every instance this library accepts
 * (arrival times are capped at `max_arrival`).
 */
using weight_t = unsigned __int128;

//! Largest accepted arrival time.  2^100 times 2^20 inputs still fits weight_t.
inline constexpr int64_t max_arrival = 100;

inline int floor_log2( weight_t w )
{
  assert( w > 0 );
  int b = -1;
  while ( w > 0 )
  {
    w >>= 1;
    ++b;
  }
  return b;
}

//! Exact ⌈log2 w⌉ in integer arithmetic.
inline int ceil_log2( weight_t w )
{
  assert( w > 0 );
  int const f = floor_log2( w );
  return ( ( weight_t( 1 ) << f ) == w ) ? f : f + 1;
}

//! log2 as a real number; used only on the formula side of bound checks.
inline double log2_real( weight_t w )
{
  assert( w > 0 );
  int const f = floor_log2( w );
  if ( f <= 62 )
  {
    return std::log2( static_cast<double>( static_cast<uint64_t>( w ) ) );
  }
  int const shift = f - 52;
  auto const top = static_cast<double>( static_cast<uint64_t>( w >> shift ) );
  return std::log2( top ) + shift;
}

inline double log2_real( double x )
{
  return std::log2( x );
}

/*! \brief Iterated logarithm log2^{(k)} n (real-valued).
 *
 * Throws when an intermediate value is non-positive, i.e. when the iterated
 * logarithm is undefined for this n.
 */
inline double iterated_log2( double n, unsigned k )
{
  double v = n;
  for ( auto i = 0u; i < k; ++i )
  {
    if ( v <= 0.0 )
    {
      throw std::domain_error( "iterated_log2: undefined for this argument" );
    }
    v = std::log2( v );
  }
  return v;
}

//! Σ 2^{t_i} for a list of arrival times.
inline weight_t weight_of( std::span<const int64_t> arrivals )
{
  weight_t w = 0;
  for ( auto t : arrivals )
  {
    if ( t < 0 || t > max_arrival )
    {
      throw std::invalid_argument( "arrival time out of range [0, 100]" );
    }
    w += weight_t( 1 ) << static_cast<unsigned>( t );
  }
  return w;
}

inline std::string to_string( weight_t w )
{
  if ( w == 0 )
  {
    return "0";
  }
  std::string s;
  while ( w > 0 )
  {
    s.insert( s.begin(), static_cast<char>( '0' + static_cast<int>( w % 10 ) ) );
    w /= 10;
  }
  return s;
}

} // namespace carrysynth
