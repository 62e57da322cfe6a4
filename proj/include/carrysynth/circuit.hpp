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
  \file circuit.hpp
  \brief Immutable circuit DAG, hashing builder, metrics, duality, validation

  A circuit is an acyclic DAG over the basis {AND, OR} (plus XOR/NOT in
  non-monotone wrapper layers) with labeled inputs and an ordered output
  list.  Node ids are dense and assigned in creation order, so id order is
  a topological order; this is an invariant every consumer relies on.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "numeric.hpp"

namespace carrysynth
{

using node_id = uint32_t;
inline constexpr node_id null_node = 0xffffffffu;

enum class aop_variant : uint8_t
{
  g,      //!< x0 ∧ (x1 ∨ (x2 ∧ ...))
  g_star  //!< x0 ∨ (x1 ∧ (x2 ∨ ...))
};

enum class gate_kind : uint8_t
{
  INPUT = 0,
  AND = 1,
  OR = 2,
  XOR = 3,
  NOT = 4
};

inline const char* to_string( gate_kind k )
{
  switch ( k )
  {
  case gate_kind::INPUT:
    return "INPUT";
  case gate_kind::AND:
    return "AND";
  case gate_kind::OR:
    return "OR";
  case gate_kind::XOR:
    return "XOR";
  default:
    return "NOT";
  }
}

struct circuit_node
{
  gate_kind kind;
  node_id fanin0 = null_node; //!< for INPUT nodes: index into the label table
  node_id fanin1 = null_node;
};

struct circuit_output
{
  node_id node;
  std::string tag; //!< semantic index, e.g. "c3" or "out5"
};

/*! \brief Per-input-label arrival times; absent labels default to 0. */
struct arrival_profile
{
  std::map<std::string, int64_t> times;

  int64_t at( std::string const& label ) const
  {
    auto const it = times.find( label );
    return it == times.end() ? 0 : it->second;
  }
};

struct metrics
{
  int64_t delay = 0;
  int64_t depth = 0;
  int64_t size = 0;
  int64_t max_fanout = 0;
};

struct validation_report
{
  std::vector<std::string> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
};

/*! \brief Frozen circuit DAG.
 *
 * Immutable after construction; safe to share across threads for
 * evaluation and metric computation.
 */
class circuit
{
public:
  circuit() = default;

  //! Unchecked assembly, used by the builder, the netlist importer, and
  //! tests that need to express invalid graphs.  Run validate() to check.
  static circuit from_raw( std::vector<circuit_node> nodes,
                           std::vector<std::string> input_labels,
                           std::vector<circuit_output> outputs,
                           bool monotone_core )
  {
    circuit c;
    c.nodes_ = std::move( nodes );
    c.input_labels_ = std::move( input_labels );
    c.outputs_ = std::move( outputs );
    c.monotone_core_ = monotone_core;
    c.input_nodes_.clear();
    c.input_nodes_.resize( c.input_labels_.size(), null_node );
    for ( node_id v = 0; v < c.nodes_.size(); ++v )
    {
      if ( c.nodes_[v].kind == gate_kind::INPUT && c.nodes_[v].fanin0 < c.input_nodes_.size() )
      {
        c.input_nodes_[c.nodes_[v].fanin0] = v;
      }
    }
    return c;
  }

  uint32_t num_nodes() const { return static_cast<uint32_t>( nodes_.size() ); }
  uint32_t num_inputs() const { return static_cast<uint32_t>( input_labels_.size() ); }
  //! Size in the gate-count sense: inputs are not gates.
  int64_t size() const { return static_cast<int64_t>( nodes_.size() - input_labels_.size() ); }

  bool is_input( node_id v ) const { return nodes_[v].kind == gate_kind::INPUT; }
  gate_kind kind( node_id v ) const { return nodes_[v].kind; }
  node_id fanin0( node_id v ) const { return nodes_[v].fanin0; }
  node_id fanin1( node_id v ) const { return nodes_[v].fanin1; }

  std::string const& label( node_id v ) const { return input_labels_[nodes_[v].fanin0]; }
  std::string const& input_label( uint32_t input_index ) const { return input_labels_[input_index]; }
  node_id input_node( uint32_t input_index ) const { return input_nodes_[input_index]; }

  std::vector<circuit_output> const& outputs() const { return outputs_; }
  bool monotone_core() const { return monotone_core_; }

  std::vector<circuit_node> const& nodes() const { return nodes_; }
  std::vector<std::string> const& input_labels() const { return input_labels_; }

  //! Arrival times in input-index order for a label-keyed profile.
  std::vector<int64_t> arrivals_for( arrival_profile const& a ) const
  {
    std::vector<int64_t> t( num_inputs() );
    for ( auto i = 0u; i < num_inputs(); ++i )
    {
      t[i] = a.at( input_labels_[i] );
    }
    return t;
  }

private:
  std::vector<circuit_node> nodes_;
  std::vector<std::string> input_labels_;
  std::vector<node_id> input_nodes_;
  std::vector<circuit_output> outputs_;
  bool monotone_core_ = true;
};

/*! \brief 64-way bit-parallel evaluation.
 *
 * `input_words[i]` carries one bit per lane for input index i.  Returns one
 * word per declared output, in output order.
 */
inline std::vector<uint64_t> evaluate_words( circuit const& c, std::span<const uint64_t> input_words )
{
  if ( input_words.size() != c.num_inputs() )
  {
    throw std::invalid_argument( "evaluate: assignment does not cover every input" );
  }
  std::vector<uint64_t> val( c.num_nodes() );
  for ( node_id v = 0; v < c.num_nodes(); ++v )
  {
    auto const& n = c.nodes()[v];
    // id order is topological order: gates only read already-set values
    assert( n.kind == gate_kind::INPUT || ( n.fanin0 < v && ( n.kind == gate_kind::NOT || n.fanin1 < v ) ) );
    switch ( n.kind )
    {
    case gate_kind::INPUT:
      val[v] = input_words[n.fanin0];
      break;
    case gate_kind::AND:
      val[v] = val[n.fanin0] & val[n.fanin1];
      break;
    case gate_kind::OR:
      val[v] = val[n.fanin0] | val[n.fanin1];
      break;
    case gate_kind::XOR:
      val[v] = val[n.fanin0] ^ val[n.fanin1];
      break;
    case gate_kind::NOT:
      val[v] = ~val[n.fanin0];
      break;
    }
  }
  std::vector<uint64_t> out;
  out.reserve( c.outputs().size() );
  for ( auto const& o : c.outputs() )
  {
    out.push_back( val[o.node] );
  }
  return out;
}

inline std::vector<bool> evaluate( circuit const& c, std::vector<bool> const& assignment )
{
  std::vector<uint64_t> words( assignment.size() );
  for ( size_t i = 0; i < assignment.size(); ++i )
  {
    words[i] = assignment[i] ? ~uint64_t( 0 ) : 0;
  }
  auto const out = evaluate_words( c, words );
  std::vector<bool> bits( out.size() );
  for ( size_t i = 0; i < out.size(); ++i )
  {
    bits[i] = ( out[i] & 1u ) != 0;
  }
  return bits;
}

//! Map-keyed evaluation; every input label must be present.
inline std::vector<bool> evaluate( circuit const& c, std::map<std::string, bool> const& assignment )
{
  std::vector<bool> bits( c.num_inputs() );
  for ( auto i = 0u; i < c.num_inputs(); ++i )
  {
    auto const it = assignment.find( c.input_label( i ) );
    if ( it == assignment.end() )
    {
      throw std::invalid_argument( "evaluate: missing input value for " + c.input_label( i ) );
    }
    bits[i] = it->second;
  }
  return evaluate( c, bits );
}

//! Node arrival times under the given input arrivals (a(v) = max fanin + 1).
inline std::vector<int64_t> node_arrivals( circuit const& c, std::span<const int64_t> input_arrivals )
{
  std::vector<int64_t> a( c.num_nodes() );
  for ( node_id v = 0; v < c.num_nodes(); ++v )
  {
    auto const& n = c.nodes()[v];
    if ( n.kind == gate_kind::INPUT )
    {
      a[v] = input_arrivals[n.fanin0];
    }
    else if ( n.kind == gate_kind::NOT )
    {
      a[v] = a[n.fanin0] + 1;
    }
    else
    {
      a[v] = std::max( a[n.fanin0], a[n.fanin1] ) + 1;
    }
  }
  return a;
}

inline int64_t delay( circuit const& c, std::span<const int64_t> input_arrivals )
{
  auto const a = node_arrivals( c, input_arrivals );
  int64_t d = 0;
  for ( auto const& o : c.outputs() )
  {
    d = std::max( d, a[o.node] );
  }
  return d;
}

inline int64_t delay( circuit const& c, arrival_profile const& a )
{
  auto const t = c.arrivals_for( a );
  return delay( c, std::span<const int64_t>( t.data(), t.size() ) );
}

inline int64_t depth( circuit const& c )
{
  std::vector<int64_t> const zeros( c.num_inputs(), 0 );
  return delay( c, std::span<const int64_t>( zeros.data(), zeros.size() ) );
}

inline int64_t max_fanout( circuit const& c )
{
  std::vector<int64_t> fo( c.num_nodes(), 0 );
  for ( node_id v = 0; v < c.num_nodes(); ++v )
  {
    auto const& n = c.nodes()[v];
    if ( n.kind == gate_kind::INPUT )
    {
      continue;
    }
    ++fo[n.fanin0];
    if ( n.kind != gate_kind::NOT )
    {
      ++fo[n.fanin1];
    }
  }
  int64_t m = 0;
  for ( auto f : fo )
  {
    m = std::max( m, f );
  }
  return m;
}

inline metrics compute_metrics( circuit const& c, arrival_profile const& a = {} )
{
  metrics m;
  m.delay = delay( c, a );
  m.depth = depth( c );
  m.size = c.size();
  m.max_fanout = max_fanout( c );
  return m;
}

/*! \brief AND↔OR swap.  Rejects circuits outside the monotone basis. */
inline circuit dualize( circuit const& c )
{
  auto nodes = c.nodes();
  for ( auto& n : nodes )
  {
    if ( n.kind == gate_kind::AND )
    {
      n.kind = gate_kind::OR;
    }
    else if ( n.kind == gate_kind::OR )
    {
      n.kind = gate_kind::AND;
    }
    else if ( n.kind != gate_kind::INPUT )
    {
      throw std::invalid_argument( "dualize: circuit is not a monotone core" );
    }
  }
  return circuit::from_raw( std::move( nodes ), c.input_labels(), c.outputs(), c.monotone_core() );
}

/*! \brief Checks every structural invariant; returns findings instead of throwing.
 *
 * Violations: dangling or non-preceding fanins (cycles show up here), bad
 * arity, duplicate input labels, outputs pointing at non-existent nodes,
 * non-monotone gates in a circuit flagged as monotone core.  Warnings:
 * dead gates (fanout 0, not an output) and unused inputs.
 */
inline validation_report validate( circuit const& c )
{
  validation_report rep;
  auto const n = c.num_nodes();

  std::map<std::string, int> label_count;
  for ( auto const& l : c.input_labels() )
  {
    ++label_count[l];
  }
  for ( auto const& [l, cnt] : label_count )
  {
    if ( cnt > 1 )
    {
      rep.violations.push_back( "duplicate input label: " + l );
    }
  }

  std::vector<int64_t> fanout( n, 0 );
  uint32_t seen_inputs = 0;
  for ( node_id v = 0; v < n; ++v )
  {
    auto const& nd = c.nodes()[v];
    if ( nd.kind == gate_kind::INPUT )
    {
      ++seen_inputs;
      if ( nd.fanin0 >= c.num_inputs() )
      {
        rep.violations.push_back( "input node " + std::to_string( v ) + " has no label" );
      }
      continue;
    }
    unsigned const arity = nd.kind == gate_kind::NOT ? 1 : 2;
    node_id const fi[2] = { nd.fanin0, nd.fanin1 };
    for ( auto i = 0u; i < arity; ++i )
    {
      if ( fi[i] >= n )
      {
        rep.violations.push_back( "gate " + std::to_string( v ) + " has dangling predecessor" );
      }
      else if ( fi[i] >= v )
      {
        rep.violations.push_back( "gate " + std::to_string( v ) +
                                  " predecessor does not precede it (cycle)" );
      }
      else
      {
        ++fanout[fi[i]];
      }
    }
    if ( c.monotone_core() && nd.kind != gate_kind::AND && nd.kind != gate_kind::OR )
    {
      rep.violations.push_back( "non-monotone gate in monotone core: node " + std::to_string( v ) );
    }
  }
  if ( seen_inputs != c.num_inputs() )
  {
    rep.violations.push_back( "input label table does not match input nodes" );
  }

  std::vector<bool> is_output( n, false );
  for ( auto const& o : c.outputs() )
  {
    if ( o.node >= n )
    {
      rep.violations.push_back( "output '" + o.tag + "' refers to non-existent node" );
    }
    else
    {
      is_output[o.node] = true;
    }
  }

  for ( node_id v = 0; v < n; ++v )
  {
    if ( fanout[v] == 0 && !is_output[v] )
    {
      if ( c.is_input( v ) )
      {
        rep.warnings.push_back( "input '" + c.label( v ) + "' is unused" );
      }
      else
      {
        rep.warnings.push_back( "dead gate: node " + std::to_string( v ) );
      }
    }
  }
  return rep;
}

/*! \brief Append-only circuit builder with structural hashing.
 *
 * Two gates with the same kind and the same ordered predecessors are one
 * node, so deliberate gate reuse in the constructions costs nothing.  A
 * flag disables hashing to measure naive sizes.  The builder tracks node
 * arrival times incrementally; constructions use them for their delay
 * decisions and for the recorded sub-circuit metrics.
 */
class circuit_builder
{
public:
  explicit circuit_builder( bool structural_hashing = true )
      : hashing_( structural_hashing )
  {
  }

  node_id add_input( std::string label, int64_t arrival = 0 )
  {
    if ( arrival < 0 || arrival > max_arrival )
    {
      throw std::invalid_argument( "arrival time out of range [0, 100]" );
    }
    if ( !label_set_.emplace( label, static_cast<uint32_t>( input_labels_.size() ) ).second )
    {
      throw std::invalid_argument( "duplicate input label: " + label );
    }
    auto const v = static_cast<node_id>( nodes_.size() );
    nodes_.push_back( { gate_kind::INPUT, static_cast<node_id>( input_labels_.size() ), null_node } );
    input_labels_.push_back( std::move( label ) );
    arrival_.push_back( arrival );
    return v;
  }

  node_id add_gate( gate_kind kind, node_id a, node_id b )
  {
    if ( kind == gate_kind::INPUT )
    {
      throw std::invalid_argument( "add_gate: INPUT is not a gate kind" );
    }
    if ( a >= nodes_.size() || ( kind != gate_kind::NOT && b >= nodes_.size() ) )
    {
      throw std::invalid_argument( "add_gate: dangling predecessor" );
    }
    if ( kind == gate_kind::NOT )
    {
      b = null_node;
    }
    if ( hashing_ )
    {
      auto const it = strash_.find( key( kind, a, b ) );
      if ( it != strash_.end() )
      {
        return it->second;
      }
    }
    auto const v = static_cast<node_id>( nodes_.size() );
    nodes_.push_back( { kind, a, b } );
    arrival_.push_back( kind == gate_kind::NOT ? arrival_[a] + 1
                                               : std::max( arrival_[a], arrival_[b] ) + 1 );
    if ( hashing_ )
    {
      strash_.emplace( key( kind, a, b ), v );
    }
    return v;
  }

  node_id add_and( node_id a, node_id b ) { return add_gate( gate_kind::AND, a, b ); }
  node_id add_or( node_id a, node_id b ) { return add_gate( gate_kind::OR, a, b ); }
  node_id add_xor( node_id a, node_id b ) { return add_gate( gate_kind::XOR, a, b ); }
  node_id add_not( node_id a ) { return add_gate( gate_kind::NOT, a, null_node ); }

  void add_output( node_id v, std::string tag )
  {
    if ( v >= nodes_.size() )
    {
      throw std::invalid_argument( "add_output: no such node" );
    }
    outputs_.push_back( { v, std::move( tag ) } );
  }

  int64_t arrival( node_id v ) const { return v == null_node ? 0 : arrival_[v]; }
  uint32_t num_nodes() const { return static_cast<uint32_t>( nodes_.size() ); }
  gate_kind kind( node_id v ) const { return nodes_[v].kind; }

  //! Max arrival over a set of nodes, i.e. the measured delay of the
  //! sub-circuit rooted there.
  int64_t delay_of( std::span<const node_id> outs ) const
  {
    int64_t d = 0;
    for ( auto v : outs )
    {
      d = std::max( d, arrival( v ) );
    }
    return d;
  }

  /*! \brief Number of distinct gates in the fanin cone of `outs`.
   *
   * Traversal stops at inputs and at any node listed in `boundary`;
   * the boundary is how sub-circuits over composed (gate-valued) signals
   * are measured without descending into their operands.
   */
  int64_t cone_size( std::span<const node_id> outs, std::span<const node_id> boundary = {} ) const
  {
    ++epoch_;
    mark_.resize( nodes_.size(), 0 );
    for ( auto v : boundary )
    {
      if ( v != null_node )
      {
        mark_[v] = epoch_;
      }
    }
    int64_t count = 0;
    std::vector<node_id> stack;
    for ( auto v : outs )
    {
      if ( v != null_node && mark_[v] != epoch_ )
      {
        mark_[v] = epoch_;
        stack.push_back( v );
      }
    }
    while ( !stack.empty() )
    {
      auto const v = stack.back();
      stack.pop_back();
      auto const& n = nodes_[v];
      if ( n.kind == gate_kind::INPUT )
      {
        continue;
      }
      ++count;
      for ( auto f : { n.fanin0, n.fanin1 } )
      {
        if ( f != null_node && mark_[f] != epoch_ )
        {
          mark_[f] = epoch_;
          stack.push_back( f );
        }
      }
    }
    return count;
  }

  /*! \brief Copies a circuit into this builder, mapping its inputs by label.
   *
   * Returns the node ids the donor's outputs land on.  Donor gates are
   * re-hashed, so splicing shares structure with what is already built.
   */
  std::vector<node_id> splice( circuit const& donor, std::map<std::string, node_id> const& input_map )
  {
    std::vector<node_id> image( donor.num_nodes() );
    for ( node_id v = 0; v < donor.num_nodes(); ++v )
    {
      auto const& n = donor.nodes()[v];
      if ( n.kind == gate_kind::INPUT )
      {
        auto const it = input_map.find( donor.label( v ) );
        if ( it == input_map.end() )
        {
          throw std::invalid_argument( "splice: no mapping for input " + donor.label( v ) );
        }
        image[v] = it->second;
      }
      else
      {
        image[v] = add_gate( n.kind, image[n.fanin0],
                             n.kind == gate_kind::NOT ? null_node : image[n.fanin1] );
      }
    }
    std::vector<node_id> outs;
    outs.reserve( donor.outputs().size() );
    for ( auto const& o : donor.outputs() )
    {
      outs.push_back( image[o.node] );
    }
    return outs;
  }

  //! Freeze.  The monotone_core flag is derived from the gates present.
  circuit finish()
  {
    bool monotone = true;
    for ( auto const& n : nodes_ )
    {
      if ( n.kind == gate_kind::XOR || n.kind == gate_kind::NOT )
      {
        monotone = false;
        break;
      }
    }
    return circuit::from_raw( std::move( nodes_ ), std::move( input_labels_ ),
                              std::move( outputs_ ), monotone );
  }

private:
  static uint64_t key( gate_kind kind, node_id a, node_id b )
  {
    return ( uint64_t( kind ) << 60 ) | ( uint64_t( a ) << 30 ) | uint64_t( b == null_node ? 0 : b + 1 );
  }

  bool hashing_;
  std::vector<circuit_node> nodes_;
  std::vector<std::string> input_labels_;
  std::unordered_map<std::string, uint32_t> label_set_;
  std::vector<circuit_output> outputs_;
  std::vector<int64_t> arrival_;
  std::unordered_map<uint64_t, node_id> strash_;
  mutable std::vector<uint32_t> mark_;
  mutable uint32_t epoch_ = 0;
};

} // namespace carrysynth
