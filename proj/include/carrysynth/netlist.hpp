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
  \file netlist.hpp
  \brief JSON netlist/profile/report schemas and DOT rendering

  The JSON netlist is the canonical interchange format: nodes in
  topological id order, predecessors referencing earlier ids, outputs with
  semantic tags.  Serialization is byte-deterministic (sorted keys, fixed
  indentation), and export→import→export round-trips identically.  DOT
  output is advisory rendering only.
*/

#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bounds.hpp"
#include "circuit.hpp"

namespace carrysynth
{

inline constexpr int netlist_schema_version = 1;

using json = nlohmann::json;

inline json netlist_to_json( circuit const& c )
{
  json nodes = json::array();
  for ( node_id v = 0; v < c.num_nodes(); ++v )
  {
    json n;
    n["id"] = v;
    auto const k = c.kind( v );
    if ( k == gate_kind::NOT )
    {
      throw std::invalid_argument( "netlist: NOT gates are outside the schema" );
    }
    n["kind"] = to_string( k );
    if ( k == gate_kind::INPUT )
    {
      n["label"] = c.label( v );
    }
    else
    {
      n["preds"] = json::array( { c.fanin0( v ), c.fanin1( v ) } );
    }
    nodes.push_back( std::move( n ) );
  }
  json outs = json::array();
  for ( size_t i = 0; i < c.outputs().size(); ++i )
  {
    json o;
    o["index"] = i + 1;
    o["node"] = c.outputs()[i].node;
    o["tag"] = c.outputs()[i].tag;
    outs.push_back( std::move( o ) );
  }
  json j;
  j["schema_version"] = netlist_schema_version;
  j["monotone_core"] = c.monotone_core();
  j["nodes"] = std::move( nodes );
  j["outputs"] = std::move( outs );
  return j;
}

inline circuit netlist_from_json( json const& j )
{
  if ( !j.is_object() || !j.contains( "schema_version" ) ||
       j["schema_version"].get<int>() != netlist_schema_version )
  {
    throw std::invalid_argument( "netlist: missing or unsupported schema_version" );
  }
  std::vector<circuit_node> nodes;
  std::vector<std::string> labels;
  for ( auto const& n : j.at( "nodes" ) )
  {
    if ( n.at( "id" ).get<uint64_t>() != nodes.size() )
    {
      throw std::invalid_argument( "netlist: node ids must be dense and ascending" );
    }
    auto const kind = n.at( "kind" ).get<std::string>();
    if ( kind == "INPUT" )
    {
      nodes.push_back( { gate_kind::INPUT, static_cast<node_id>( labels.size() ), null_node } );
      labels.push_back( n.at( "label" ).get<std::string>() );
      continue;
    }
    gate_kind gk;
    if ( kind == "AND" )
    {
      gk = gate_kind::AND;
    }
    else if ( kind == "OR" )
    {
      gk = gate_kind::OR;
    }
    else if ( kind == "XOR" )
    {
      gk = gate_kind::XOR;
    }
    else
    {
      throw std::invalid_argument( "netlist: unknown node kind: " + kind );
    }
    auto const& preds = n.at( "preds" );
    if ( preds.size() != 2 )
    {
      throw std::invalid_argument( "netlist: gates take exactly two predecessors" );
    }
    nodes.push_back( { gk, preds[0].get<node_id>(), preds[1].get<node_id>() } );
  }
  std::vector<circuit_output> outs;
  for ( auto const& o : j.at( "outputs" ) )
  {
    outs.push_back( { o.at( "node" ).get<node_id>(), o.at( "tag" ).get<std::string>() } );
  }
  auto c = circuit::from_raw( std::move( nodes ), std::move( labels ), std::move( outs ),
                              j.value( "monotone_core", true ) );
  auto const rep = validate( c );
  if ( !rep.ok() )
  {
    throw std::invalid_argument( "netlist: invalid circuit: " + rep.violations.front() );
  }
  return c;
}

//! Canonical text form: sorted keys, two-space indent, trailing newline.
inline std::string to_canonical_text( json const& j )
{
  return j.dump( 2 ) + "\n";
}

inline void write_json_file( std::string const& path, json const& j )
{
  std::ofstream os( path, std::ios::binary );
  if ( !os )
  {
    throw std::runtime_error( "cannot open for writing: " + path );
  }
  os << to_canonical_text( j );
}

inline json read_json_file( std::string const& path )
{
  std::ifstream is( path, std::ios::binary );
  if ( !is )
  {
    throw std::runtime_error( "cannot open: " + path );
  }
  return json::parse( is );
}

/*! \brief Arrival profile files.
 *
 * Either explicit arrays {"n": ..., "p": [...], "g": [...]} (or a flat
 * {"inputs": [...]} list for path/prefix instances), or a generator spec
 * {"n": ..., "dist": "zero" | "uniform" | "geometric", "lo": ..,
 *  "hi": .., "pr": .., "seed": ..}.
 */
struct profile_file
{
  uint32_t n = 0;
  std::vector<int64_t> p, g; //!< pair form
  std::vector<int64_t> flat; //!< flat form

  bool is_pair_form() const { return !p.empty(); }
};

namespace detail
{

inline std::vector<int64_t> generate_arrivals( uint32_t count, std::string const& dist, int64_t lo,
                                               int64_t hi, double pr, std::mt19937_64& rng )
{
  std::vector<int64_t> t( count, 0 );
  if ( dist == "zero" )
  {
    return t;
  }
  if ( dist == "uniform" )
  {
    if ( lo < 0 || hi < lo || hi > max_arrival )
    {
      throw std::invalid_argument( "profile: uniform bounds out of range" );
    }
    std::uniform_int_distribution<int64_t> d( lo, hi );
    for ( auto& v : t )
    {
      v = d( rng );
    }
    return t;
  }
  if ( dist == "geometric" )
  {
    if ( pr <= 0.0 || pr >= 1.0 )
    {
      throw std::invalid_argument( "profile: geometric parameter must be in (0,1)" );
    }
    std::geometric_distribution<int64_t> d( pr );
    for ( auto& v : t )
    {
      v = std::min<int64_t>( d( rng ), 40 );
    }
    return t;
  }
  throw std::invalid_argument( "profile: unknown distribution: " + dist );
}

} // namespace detail

//! Parses a generator spec string: "zero", "uniform:LO:HI", "geometric:PR".
inline profile_file generate_profile( uint32_t n, std::string const& spec, uint64_t seed,
                                      bool pair_form )
{
  std::string dist = spec;
  int64_t lo = 0, hi = 0;
  double pr = 0.5;
  if ( auto const c = spec.find( ':' ); c != std::string::npos )
  {
    dist = spec.substr( 0, c );
    auto const rest = spec.substr( c + 1 );
    if ( dist == "uniform" )
    {
      auto const c2 = rest.find( ':' );
      if ( c2 == std::string::npos )
      {
        throw std::invalid_argument( "profile: uniform spec is uniform:LO:HI" );
      }
      lo = std::stoll( rest.substr( 0, c2 ) );
      hi = std::stoll( rest.substr( c2 + 1 ) );
    }
    else if ( dist == "geometric" )
    {
      pr = std::stod( rest );
    }
  }
  std::mt19937_64 rng( seed );
  profile_file pf;
  pf.n = n;
  if ( pair_form )
  {
    pf.p = detail::generate_arrivals( n, dist, lo, hi, pr, rng );
    pf.g = detail::generate_arrivals( n, dist, lo, hi, pr, rng );
    pf.p[0] = 0; // adder convention
  }
  else
  {
    pf.flat = detail::generate_arrivals( n, dist, lo, hi, pr, rng );
  }
  return pf;
}

inline profile_file profile_from_json( json const& j )
{
  profile_file pf;
  pf.n = j.at( "n" ).get<uint32_t>();
  if ( j.contains( "dist" ) )
  {
    auto spec = j["dist"].get<std::string>();
    if ( spec == "uniform" )
    {
      spec += ":" + std::to_string( j.value( "lo", 0 ) ) + ":" + std::to_string( j.value( "hi", 0 ) );
    }
    else if ( spec == "geometric" )
    {
      spec += ":" + std::to_string( j.value( "pr", 0.5 ) );
    }
    bool const pair_form = !j.value( "flat", false );
    return generate_profile( pf.n, spec, j.value( "seed", uint64_t( 0 ) ), pair_form );
  }
  auto read_vec = [&]( char const* key ) {
    std::vector<int64_t> v;
    for ( auto const& x : j.at( key ) )
    {
      v.push_back( x.get<int64_t>() );
    }
    return v;
  };
  if ( j.contains( "inputs" ) )
  {
    pf.flat = read_vec( "inputs" );
    if ( pf.flat.size() != pf.n )
    {
      throw std::invalid_argument( "profile: inputs array length must equal n" );
    }
    return pf;
  }
  pf.p = read_vec( "p" );
  pf.g = read_vec( "g" );
  if ( pf.p.size() != pf.n || pf.g.size() != pf.n )
  {
    throw std::invalid_argument( "profile: p and g arrays must have length n" );
  }
  pf.p[0] = 0; // adder convention
  return pf;
}

inline json profile_to_json( profile_file const& pf )
{
  json j;
  j["n"] = pf.n;
  if ( pf.is_pair_form() )
  {
    j["p"] = pf.p;
    j["g"] = pf.g;
  }
  else
  {
    j["inputs"] = pf.flat;
  }
  return j;
}

inline json metrics_to_json( metrics const& m )
{
  json j;
  j["delay"] = m.delay;
  j["depth"] = m.depth;
  j["size"] = m.size;
  j["max_fanout"] = m.max_fanout;
  return j;
}

inline json report_to_json( bound_report const& r )
{
  json j;
  j["recipe"] = r.recipe;
  j["n"] = r.n;
  j["W"] = to_string( r.w );
  j["measured"] = metrics_to_json( r.measured );
  j["lower_bound"] = { { "kind", r.lower_bound_kind },
                       { "value", r.lower_bound },
                       { "satisfied", r.lower_bound_ok } };
  json fs = json::array();
  for ( auto const& f : r.formulas )
  {
    fs.push_back( { { "name", f.name },
                    { "tier", to_string( f.tier ) },
                    { "bound", f.bound },
                    { "measured", f.measured },
                    { "slack", f.slack },
                    { "satisfied", f.satisfied } } );
  }
  j["formulas"] = std::move( fs );
  json ss = json::array();
  for ( auto const& s : r.structural )
  {
    ss.push_back( { { "framework", s.framework },
                    { "n", s.n },
                    { "delay", s.delay },
                    { "delay_bound", s.delay_bound },
                    { "size", s.size },
                    { "size_bound", s.size_bound },
                    { "satisfied", s.satisfied } } );
  }
  j["structural"] = std::move( ss );
  j["all_required_satisfied"] = r.all_required_ok();
  return j;
}

/*! \brief DOT rendering: inputs as plain nodes, AND/OR/XOR shape-coded,
 * outputs as labeled sinks.  Stable node ordering.
 */
inline std::string export_dot( circuit const& c )
{
  std::ostringstream os;
  os << "digraph circuit {\n  rankdir=TB;\n";
  for ( node_id v = 0; v < c.num_nodes(); ++v )
  {
    auto const k = c.kind( v );
    if ( k == gate_kind::INPUT )
    {
      os << "  n" << v << " [shape=plaintext,label=\"" << c.label( v ) << "\"];\n";
    }
    else
    {
      char const* shape = k == gate_kind::AND ? "invtriangle" : k == gate_kind::OR ? "invhouse" : "diamond";
      os << "  n" << v << " [shape=" << shape << ",label=\"" << to_string( k ) << "\"];\n";
    }
  }
  for ( node_id v = 0; v < c.num_nodes(); ++v )
  {
    if ( c.is_input( v ) )
    {
      continue;
    }
    os << "  n" << c.fanin0( v ) << " -> n" << v << ";\n";
    if ( c.kind( v ) != gate_kind::NOT )
    {
      os << "  n" << c.fanin1( v ) << " -> n" << v << ";\n";
    }
  }
  for ( size_t i = 0; i < c.outputs().size(); ++i )
  {
    os << "  o" << i << " [shape=plaintext,label=\"" << c.outputs()[i].tag << "\"];\n";
    os << "  n" << c.outputs()[i].node << " -> o" << i << ";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace carrysynth
