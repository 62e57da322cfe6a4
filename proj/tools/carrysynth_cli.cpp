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

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <carrysynth/netlist.hpp>
#include <carrysynth/recipes.hpp>

using namespace carrysynth;

namespace
{

struct profile_args
{
  std::string path;
  std::string gen = "zero";
  uint64_t seed = 0;
};

void add_profile_flags( CLI::App* cmd, profile_args& pa )
{
  cmd->add_option( "--profile", pa.path, "arrival profile JSON file" );
  cmd->add_option( "--profile-gen", pa.gen,
                   "generator spec: zero | uniform:LO:HI | geometric:PR (default zero)" );
  cmd->add_option( "--seed", pa.seed, "seed for generated profiles / sampling" );
}

bool recipe_is_pair_form( std::string const& name )
{
  auto const base = name.substr( 0, name.find( ':' ) );
  return !( base == "lf" || base == "rsw-prefix" || base == "standard-aop" ||
            base == "standard-aop-g" || base == "delay-aop" || base == "delay-aop-g" );
}

profile_file load_profile( profile_args const& pa, std::string const& recipe, uint32_t n )
{
  if ( !pa.path.empty() )
  {
    auto pf = profile_from_json( read_json_file( pa.path ) );
    if ( pf.n != n )
    {
      throw std::invalid_argument( "profile n does not match --n" );
    }
    return pf;
  }
  return generate_profile( n, pa.gen, pa.seed, recipe_is_pair_form( recipe ) );
}

std::string fmt_double( double v )
{
  char buf[48];
  std::snprintf( buf, sizeof buf, "%.6f", v );
  return buf;
}

std::string csv_quote( std::string const& s )
{
  if ( s.find_first_of( ",\"\n" ) == std::string::npos )
  {
    return s;
  }
  std::string q = "\"";
  for ( auto ch : s )
  {
    if ( ch == '"' )
    {
      q += '"';
    }
    q += ch;
  }
  q += '"';
  return q;
}

unsigned thread_budget()
{
  if ( auto const* env = std::getenv( "CARRYSYNTH_THREADS" ) )
  {
    auto const v = std::strtoul( env, nullptr, 10 );
    if ( v >= 1 )
    {
      return static_cast<unsigned>( v );
    }
  }
  auto const hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct bench_row
{
  std::string recipe;
  uint32_t n = 0;
  uint64_t seed = 0;
  std::string fields; //!< everything after recipe,n,seed
};

bench_row run_bench_cell( std::string const& recipe, uint32_t n, std::string const& gen,
                          uint64_t seed )
{
  auto const pf = generate_profile( n, gen, seed, recipe_is_pair_form( recipe ) );
  auto const t0 = std::chrono::steady_clock::now();
  auto const rb = run_recipe( recipe, pf );
  auto const ms =
      std::chrono::duration_cast<std::chrono::milliseconds>( std::chrono::steady_clock::now() - t0 )
          .count();
  auto const prof = profile_for( rb, pf );
  auto const rep =
      make_report( rb.c, prof, recipe, rb.formula, &rb.logs, rb.formula_param, rb.is_adder );

  std::ostringstream os;
  os << to_string( rep.w ) << ',' << rep.measured.delay << ',' << rep.measured.depth << ','
     << rep.measured.size << ',' << rep.measured.max_fanout << ',' << rep.lower_bound;
  std::string db, ds, sb, ss, tier;
  for ( auto const& f : rep.formulas )
  {
    if ( f.name == "delay" )
    {
      db = fmt_double( f.bound );
      ds = fmt_double( f.slack );
      tier = to_string( f.tier );
    }
    else if ( f.name == "size" )
    {
      sb = fmt_double( f.bound );
      ss = fmt_double( f.slack );
      tier = to_string( f.tier );
    }
  }
  os << ',' << db << ',' << ds << ',' << sb << ',' << ss;
  // structural bound of the root framework invocation, when one exists
  std::string sdb, sds, ssb, sss;
  if ( !rep.structural.empty() )
  {
    // the root invocation is recorded last within its framework
    structural_entry const* root = nullptr;
    for ( auto const& s : rep.structural )
    {
      if ( s.framework != "rsw" )
      {
        root = &s;
      }
    }
    if ( root )
    {
      sdb = std::to_string( root->delay_bound );
      sds = std::to_string( root->delay_bound - root->delay );
      ssb = std::to_string( root->size_bound );
      sss = std::to_string( root->size_bound - root->size );
    }
  }
  os << ',' << sdb << ',' << sds << ',' << ssb << ',' << sss << ',' << tier << ',' << ms;

  bench_row row;
  row.recipe = recipe;
  row.n = n;
  row.seed = seed;
  row.fields = os.str();
  return row;
}

std::vector<std::string> split_list( std::string const& s )
{
  std::vector<std::string> out;
  std::stringstream ss( s );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    if ( !item.empty() )
    {
      out.push_back( item );
    }
  }
  return out;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "carrysynth: build, verify, and measure carry/prefix circuits" };
  app.require_subcommand( 1 );

  std::string recipe_help = "construction recipe, one of:";
  for ( auto const& r : recipe_names() )
  {
    recipe_help += " " + r;
  }

  // --- build ---------------------------------------------------------
  auto* build = app.add_subcommand( "build", "build a recipe and export the netlist" );
  std::string recipe, out_path, report_path;
  uint32_t n = 0;
  profile_args pa;
  build->add_option( "--recipe", recipe, recipe_help )->required();
  build->add_option( "--n", n, "instance size (pairs, or flat inputs)" )->required();
  add_profile_flags( build, pa );
  build->add_option( "--out", out_path, "netlist JSON output path" );
  build->add_option( "--report", report_path, "bound report JSON output path" );

  // --- verify --------------------------------------------------------
  auto* verify = app.add_subcommand( "verify", "check a netlist against its oracle" );
  std::string net_path, oracle_name, mode = "exhaustive";
  uint64_t vseed = 1;
  verify->add_option( "--netlist", net_path, "netlist JSON path" )->required();
  verify->add_option( "--oracle", oracle_name, "carry | prefix | aop-g | aop-gstar | sum" )
      ->required();
  verify->add_option( "--mode", mode, "exhaustive | random:<count> (default exhaustive)" );
  verify->add_option( "--seed", vseed, "seed for random mode" );

  // --- report --------------------------------------------------------
  auto* report = app.add_subcommand( "report", "rebuild a recipe and emit its bound report" );
  std::string r_recipe, r_out;
  uint32_t r_n = 0;
  profile_args rpa;
  report->add_option( "--recipe", r_recipe, recipe_help )->required();
  report->add_option( "--n", r_n, "instance size" )->required();
  add_profile_flags( report, rpa );
  report->add_option( "--out", r_out, "report JSON output path (default stdout)" );

  // --- bench ---------------------------------------------------------
  auto* bench = app.add_subcommand( "bench", "sweep recipes over sizes and seeds into a CSV" );
  std::string b_recipes, b_ns, b_gen = "zero", b_csv;
  uint32_t b_seeds = 1;
  bench->add_option( "--recipes", b_recipes, "comma-separated recipe names" )->required();
  bench->add_option( "--n", b_ns, "comma-separated instance sizes" )->required();
  bench->add_option( "--profile-gen", b_gen, "generator spec (default zero)" );
  bench->add_option( "--seeds", b_seeds, "number of seeds (0..k-1) per cell" );
  bench->add_option( "--csv", b_csv, "CSV output path (default stdout)" );

  // --- export-dot ----------------------------------------------------
  auto* dot = app.add_subcommand( "export-dot", "render a netlist as DOT" );
  std::string d_net, d_out;
  dot->add_option( "--netlist", d_net, "netlist JSON path" )->required();
  dot->add_option( "--out", d_out, "DOT output path (default stdout)" );

  CLI11_PARSE( app, argc, argv );

  try
  {
    if ( *build )
    {
      auto const pf = load_profile( pa, recipe, n );
      auto const rb = run_recipe( recipe, pf );
      auto const prof = profile_for( rb, pf );
      auto const m = compute_metrics( rb.c, prof );
      std::cout << "recipe=" << recipe << " n=" << n << " W=" << to_string( weight( rb.c, prof ) )
                << " delay=" << m.delay << " depth=" << m.depth << " size=" << m.size
                << " max_fanout=" << m.max_fanout << "\n";
      std::cout << to_canonical_text( metrics_to_json( m ) );
      if ( !out_path.empty() )
      {
        write_json_file( out_path, netlist_to_json( rb.c ) );
      }
      if ( !report_path.empty() )
      {
        auto const rep =
            make_report( rb.c, prof, recipe, rb.formula, &rb.logs, rb.formula_param, rb.is_adder );
        write_json_file( report_path, report_to_json( rep ) );
      }
      return 0;
    }

    if ( *verify )
    {
      auto const c = netlist_from_json( read_json_file( net_path ) );
      uint32_t const pairs = c.num_inputs() / 2;
      equivalence_options opt;
      opt.seed = vseed;
      if ( mode.rfind( "random:", 0 ) == 0 )
      {
        opt.force_random = true;
        opt.random_samples = static_cast<uint32_t>( std::stoul( mode.substr( 7 ) ) );
      }
      else if ( mode != "exhaustive" )
      {
        std::cerr << "verify: unknown mode " << mode << "\n";
        return 2;
      }
      auto const v = check_equivalence( c, oracle_by_name( oracle_name, pairs ), opt );
      if ( v.equivalent )
      {
        std::cout << "equivalent (" << ( v.exhaustive ? "exhaustive" : "random" ) << ", "
                  << v.assignments_checked << " assignments)\n";
        return 0;
      }
      std::cout << "MISMATCH at output index " << v.witness->output_index << " ('"
                << c.outputs()[v.witness->output_index].tag << "'), assignment:";
      for ( auto i = 0u; i < c.num_inputs(); ++i )
      {
        std::cout << ' ' << c.input_label( i ) << '=' << ( v.witness->assignment[i] ? 1 : 0 );
      }
      std::cout << "\n";
      return 1;
    }

    if ( *report )
    {
      auto const pf = load_profile( rpa, r_recipe, r_n );
      auto const rb = run_recipe( r_recipe, pf );
      auto const prof = profile_for( rb, pf );
      auto const rep =
          make_report( rb.c, prof, r_recipe, rb.formula, &rb.logs, rb.formula_param, rb.is_adder );
      auto const text = to_canonical_text( report_to_json( rep ) );
      if ( r_out.empty() )
      {
        std::cout << text;
      }
      else
      {
        std::ofstream os( r_out, std::ios::binary );
        os << text;
      }
      return 0;
    }

    if ( *bench )
    {
      auto const recipes = split_list( b_recipes );
      std::vector<uint32_t> sizes;
      for ( auto const& s : split_list( b_ns ) )
      {
        sizes.push_back( static_cast<uint32_t>( std::stoul( s ) ) );
      }
      struct cell
      {
        std::string recipe;
        uint32_t n;
        uint64_t seed;
      };
      std::vector<cell> cells;
      for ( auto const& r : recipes )
      {
        for ( auto nn : sizes )
        {
          for ( uint64_t s = 0; s < b_seeds; ++s )
          {
            cells.push_back( { r, nn, s } );
          }
        }
      }
      std::vector<bench_row> rows( cells.size() );
      std::atomic<size_t> next{ 0 };
      auto worker = [&]() {
        for ( ;; )
        {
          size_t const i = next.fetch_add( 1 );
          if ( i >= cells.size() )
          {
            return;
          }
          rows[i] = run_bench_cell( cells[i].recipe, cells[i].n, b_gen, cells[i].seed );
        }
      };
      unsigned const nt = std::min<unsigned>( thread_budget(),
                                              static_cast<unsigned>( std::max<size_t>( 1, cells.size() ) ) );
      std::vector<std::thread> pool;
      for ( auto t = 1u; t < nt; ++t )
      {
        pool.emplace_back( worker );
      }
      worker();
      for ( auto& t : pool )
      {
        t.join();
      }

      std::ostringstream csv;
      csv << "recipe,n,seed,W,delay,depth,size,max_fanout,lower_bound,delay_bound,delay_slack,"
             "size_bound,size_slack,structural_delay_bound,structural_delay_slack,"
             "structural_size_bound,structural_size_slack,tier,build_ms\n";
      for ( auto const& row : rows ) // cells were generated in sorted order
      {
        csv << csv_quote( row.recipe ) << ',' << row.n << ',' << row.seed << ',' << row.fields
            << '\n';
      }
      if ( b_csv.empty() )
      {
        std::cout << csv.str();
      }
      else
      {
        std::ofstream os( b_csv, std::ios::binary );
        if ( !os )
        {
          throw std::runtime_error( "cannot open for writing: " + b_csv );
        }
        os << csv.str();
      }
      return 0;
    }

    if ( *dot )
    {
      auto const c = netlist_from_json( read_json_file( d_net ) );
      auto const text = export_dot( c );
      if ( d_out.empty() )
      {
        std::cout << text;
      }
      else
      {
        std::ofstream os( d_out, std::ios::binary );
        os << text;
      }
      return 0;
    }
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
