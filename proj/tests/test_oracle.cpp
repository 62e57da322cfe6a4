#include <catch2/catch.hpp>

#include <carrysynth/adders.hpp>
#include <carrysynth/aop.hpp>
#include <carrysynth/oracle.hpp>

using namespace carrysynth;

namespace
{

std::vector<uint64_t> bits( std::initializer_list<int> v )
{
  std::vector<uint64_t> out;
  for ( auto b : v )
  {
    out.push_back( b ? ~uint64_t( 0 ) : 0 );
  }
  return out;
}

bool lane0( uint64_t w ) { return ( w & 1 ) != 0; }

} // namespace

TEST_CASE( "carry bits follow the generate/propagate recursion" )
{
  auto const c1 = carry_bits_ref( bits( { 1, 1, 1 } ), bits( { 0, 0, 0 } ) );
  CHECK( ( !lane0( c1[0] ) && !lane0( c1[1] ) && !lane0( c1[2] ) ) );

  auto const c2 = carry_bits_ref( bits( { 0, 1, 1 } ), bits( { 1, 0, 0 } ) );
  CHECK( ( lane0( c2[0] ) && lane0( c2[1] ) && lane0( c2[2] ) ) );

  auto const c3 = carry_bits_ref( bits( { 0, 1 } ), bits( { 1, 0 } ) );
  CHECK( lane0( c3[0] ) );
  CHECK( lane0( c3[1] ) );
}

TEST_CASE( "c_1 always equals g_0" )
{
  std::mt19937_64 rng( 3 );
  for ( int iter = 0; iter < 20; ++iter )
  {
    std::vector<uint64_t> p( 6 ), g( 6 );
    for ( auto& v : p )
    {
      v = rng();
    }
    for ( auto& v : g )
    {
      v = rng();
    }
    CHECK( carry_bits_ref( p, g )[0] == g[0] );
  }
}

TEST_CASE( "and-or path values" )
{
  CHECK( lane0( aop_ref( bits( { 1, 0, 0, 0, 0 } ), aop_variant::g_star ) ) );
  CHECK( lane0( aop_ref( bits( { 1, 1 } ), aop_variant::g ) ) );
  CHECK_FALSE( lane0( aop_ref( bits( { 1, 0 } ), aop_variant::g ) ) );
}

TEST_CASE( "g* is 1 iff some generate input fires with all propagates before it" )
{
  // generate inputs at even positions, propagates at odd positions
  for ( uint32_t m = 1; m <= 10; ++m )
  {
    for ( uint64_t v = 0; v < ( uint64_t( 1 ) << m ); ++v )
    {
      std::vector<uint64_t> x( m );
      for ( auto i = 0u; i < m; ++i )
      {
        x[i] = ( v >> i ) & 1 ? ~uint64_t( 0 ) : 0;
      }
      bool want = false;
      for ( uint32_t i = 0; i < m && !want; i += 2 )
      {
        bool fire = lane0( x[i] );
        for ( uint32_t j = 1; j < i; j += 2 )
        {
          fire &= lane0( x[j] );
        }
        // the last input acts as a generate even at odd m parity
        want |= fire;
      }
      if ( m % 2 == 0 )
      {
        bool fire = lane0( x[m - 1] );
        for ( uint32_t j = 1; j < m - 1; j += 2 )
        {
          fire &= lane0( x[j] );
        }
        want |= fire;
      }
      CHECK( lane0( aop_ref( x, aop_variant::g_star ) ) == want );
    }
  }
}

TEST_CASE( "and-prefixes" )
{
  auto const o1 = and_prefix_ref( bits( { 1, 1, 0, 1 } ) );
  CHECK( ( lane0( o1[0] ) && lane0( o1[1] ) && !lane0( o1[2] ) && !lane0( o1[3] ) ) );
  auto const o2 = and_prefix_ref( bits( { 1, 1, 1, 1, 1 } ) );
  for ( auto w : o2 )
  {
    CHECK( lane0( w ) );
  }
  auto const o3 = and_prefix_ref( bits( { 0, 1, 1 } ) );
  for ( auto w : o3 )
  {
    CHECK_FALSE( lane0( w ) );
  }
}

TEST_CASE( "sum oracle equals integer addition" )
{
  CHECK( sum_ref( 5, 3, 3 ) == 8 );
  CHECK( sum_ref( 1, 1, 1 ) == 2 );
  CHECK( sum_ref( 9, 7, 4 ) == 16 );
  CHECK_THROWS_AS( sum_ref( 9, 7, 3 ), std::invalid_argument );

  // all pairs for n <= 10, 64 values of b per evaluation
  for ( unsigned n = 1; n <= 10; ++n )
  {
    uint64_t const top = uint64_t( 1 ) << n;
    for ( uint64_t a = 0; a < top; ++a )
    {
      std::vector<uint64_t> av( n ), bv( n );
      for ( auto i = 0u; i < n; ++i )
      {
        av[i] = ( a >> i ) & 1 ? ~uint64_t( 0 ) : 0;
      }
      for ( uint64_t b0 = 0; b0 < top; b0 += 64 )
      {
        unsigned const lanes = static_cast<unsigned>( std::min<uint64_t>( 64, top - b0 ) );
        for ( auto i = 0u; i < n; ++i )
        {
          uint64_t w = 0;
          for ( unsigned lane = 0; lane < lanes; ++lane )
          {
            w |= ( ( ( b0 + lane ) >> i ) & 1u ) << lane;
          }
          bv[i] = w;
        }
        auto const s = sum_bits_ref( av, bv );
        for ( unsigned lane = 0; lane < lanes; ++lane )
        {
          uint64_t got = 0;
          for ( auto i = 0u; i <= n; ++i )
          {
            got |= ( ( s[i] >> lane ) & 1u ) << i;
          }
          REQUIRE( got == a + b0 + lane );
        }
      }
    }
  }
}

TEST_CASE( "carries agree with the path function on their signals" )
{
  // exhaustive over all assignments for n <= 8, packed 64 at a time
  for ( uint32_t n = 1; n <= 8; ++n )
  {
    uint32_t const k = 2 * n;
    uint64_t const total = uint64_t( 1 ) << k;
    for ( uint64_t base = 0; base < total; base += 64 )
    {
      std::vector<uint64_t> in( k );
      for ( uint32_t i = 0; i < k; ++i )
      {
        uint64_t w = 0;
        for ( unsigned lane = 0; lane < 64 && base + lane < total; ++lane )
        {
          w |= ( ( ( base + lane ) >> i ) & 1u ) << lane;
        }
        in[i] = w;
      }
      std::vector<uint64_t> p( n ), g( n );
      for ( auto i = 0u; i < n; ++i )
      {
        p[i] = in[2 * i];
        g[i] = in[2 * i + 1];
      }
      auto const c = carry_bits_ref( p, g );
      for ( uint32_t i = 0; i < n; ++i )
      {
        std::vector<uint64_t> x;
        for ( uint32_t j = i + 1; j-- > 0; )
        {
          x.push_back( g[j] );
          if ( j > 0 )
          {
            x.push_back( p[j] );
          }
        }
        uint64_t const mask = total - base >= 64 ? ~uint64_t( 0 )
                                                 : ( ( uint64_t( 1 ) << ( total - base ) ) - 1 );
        REQUIRE( ( ( aop_ref( x, aop_variant::g_star ) ^ c[i] ) & mask ) == 0 );
      }
    }
  }
}

TEST_CASE( "oracles are monotone" )
{
  std::mt19937_64 rng( 11 );
  for ( int iter = 0; iter < 200; ++iter )
  {
    uint32_t const n = 1 + rng() % 8;
    std::vector<uint64_t> p( n ), g( n );
    for ( auto& v : p )
    {
      v = rng() & 1 ? ~uint64_t( 0 ) : 0;
    }
    for ( auto& v : g )
    {
      v = rng() & 1 ? ~uint64_t( 0 ) : 0;
    }
    auto const before = carry_bits_ref( p, g );
    auto& target = ( rng() & 1 ) ? p : g;
    uint32_t const idx = rng() % n;
    auto const old = target[idx];
    target[idx] = ~uint64_t( 0 );
    auto const after = carry_bits_ref( p, g );
    for ( auto i = 0u; i < n; ++i )
    {
      CHECK( ( before[i] & ~after[i] ) == 0 ); // no 1 -> 0 flip
    }
    target[idx] = old;
  }
}

TEST_CASE( "check_equivalence: exhaustive agreement and witnesses" )
{
  auto const r3 = ripple_adder( adder_instance::zeros( 3 ) ).c;
  auto const v = check_equivalence( r3, carry_oracle( 3 ) );
  CHECK( v.equivalent );
  CHECK( v.exhaustive );
  CHECK( v.assignments_checked == 64 );

  auto const a5 = standard_aop( { 5, aop_variant::g_star, {} } );
  CHECK( check_equivalence( a5, aop_oracle( aop_variant::g_star ) ).equivalent );

  // flip one OR to AND and expect a witness
  auto nodes = r3.nodes();
  for ( auto& nd : nodes )
  {
    if ( nd.kind == gate_kind::OR )
    {
      nd.kind = gate_kind::AND;
      break;
    }
  }
  auto const broken =
      circuit::from_raw( std::move( nodes ), r3.input_labels(), r3.outputs(), true );
  auto const w = check_equivalence( broken, carry_oracle( 3 ) );
  CHECK_FALSE( w.equivalent );
  REQUIRE( w.witness.has_value() );
  // replay the witness
  std::vector<bool> asg( w.witness->assignment.begin(), w.witness->assignment.end() );
  std::vector<uint64_t> p( 3 ), g( 3 );
  for ( auto i = 0u; i < 3; ++i )
  {
    p[i] = asg[2 * i] ? 1 : 0;
    g[i] = asg[2 * i + 1] ? 1 : 0;
  }
  auto const want = carry_bits_ref( p, g );
  auto const got = evaluate( broken, asg );
  CHECK( got[w.witness->output_index] != lane0( want[w.witness->output_index] ) );
}

TEST_CASE( "check_equivalence: oracle arity mismatch is an error" )
{
  auto const r3 = ripple_adder( adder_instance::zeros( 3 ) ).c;
  CHECK_THROWS_AS( check_equivalence( r3, and_prefix_oracle() ), std::invalid_argument );
}

TEST_CASE( "check_equivalence: random mode is deterministic per seed" )
{
  auto const big = ripple_adder( adder_instance::zeros( 32 ) ).c;
  equivalence_options opt;
  opt.random_samples = 2000;
  opt.seed = 42;
  auto const a = check_equivalence( big, carry_oracle( 32 ), opt );
  auto const b = check_equivalence( big, carry_oracle( 32 ), opt );
  CHECK( a.equivalent );
  CHECK_FALSE( a.exhaustive );
  CHECK( a.assignments_checked == b.assignments_checked );
}
