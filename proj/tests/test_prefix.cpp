#include <catch2/catch.hpp>

#include <carrysynth/bounds.hpp>
#include <carrysynth/oracle.hpp>
#include <carrysynth/prefix.hpp>

using namespace carrysynth;

namespace
{

arrival_profile flat_profile( std::vector<int64_t> const& t )
{
  arrival_profile a;
  for ( size_t i = 0; i < t.size(); ++i )
  {
    a.times["x" + std::to_string( i )] = t[i];
  }
  return a;
}

bool all_and_gates( circuit const& c )
{
  for ( node_id v = 0; v < c.num_nodes(); ++v )
  {
    if ( !c.is_input( v ) && c.kind( v ) != gate_kind::AND )
    {
      return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE( "partition sizes" )
{
  CHECK( rsw_partition( 9 ) == std::vector<uint32_t>{ 3, 3, 3 } );
  CHECK( rsw_partition( 6 ) == std::vector<uint32_t>{ 2, 2, 2 } );
  CHECK( rsw_partition( 10 ) == std::vector<uint32_t>{ 3, 3, 2, 2 } );
  CHECK( rsw_partition( 4 ) == std::vector<uint32_t>{ 2, 2 } );
  CHECK( rsw_partition( 2 ) == std::vector<uint32_t>{ 1, 1 } );
  CHECK_THROWS_AS( rsw_partition( 1 ), std::invalid_argument );
}

TEST_CASE( "square-root prefix small cases" )
{
  auto const c4 = rsw_prefix( std::vector<int64_t>( 4, 0 ) ).c;
  CHECK( depth( c4 ) == 2 );
  CHECK( c4.size() == 4 );

  auto const c6 = rsw_prefix( std::vector<int64_t>( 6, 0 ) ).c;
  CHECK( depth( c6 ) == 3 );
  CHECK( c6.size() == 7 );

  auto const c9 = rsw_prefix( std::vector<int64_t>( 9, 0 ) ).c;
  CHECK( depth( c9 ) == 4 );
  CHECK( c9.size() == 15 );
}

TEST_CASE( "square-root prefix computes the and-prefixes" )
{
  for ( uint32_t n = 1; n <= 16; ++n )
  {
    auto const c = rsw_prefix( std::vector<int64_t>( n, 0 ) ).c;
    CHECK( all_and_gates( c ) );
    CHECK( check_equivalence( c, and_prefix_oracle() ).equivalent );
  }
  // random arrivals and larger sampled instances
  std::mt19937_64 rng( 23 );
  equivalence_options opt;
  opt.random_samples = 10000;
  for ( uint32_t n : { 257u, 4096u } )
  {
    std::vector<int64_t> t( n );
    for ( auto& v : t )
    {
      v = static_cast<int64_t>( rng() % 17 );
    }
    CHECK( check_equivalence( rsw_prefix( t ).c, and_prefix_oracle(), opt ).equivalent );
  }
  CHECK( check_equivalence( ladner_fischer( 4096, 0 ), and_prefix_oracle(), opt ).equivalent );
}

TEST_CASE( "square-root prefix meets its closed-form bounds" )
{
  std::mt19937_64 rng( 29 );
  for ( uint32_t n : { 3u, 5u, 9u, 33u, 100u } )
  {
    for ( int iter = 0; iter < 4; ++iter )
    {
      std::vector<int64_t> t( n );
      for ( auto& v : t )
      {
        v = static_cast<int64_t>( rng() % 13 );
      }
      auto const res = rsw_prefix( t );
      auto const fb = bound_formula( "rsw", n, weight_of( t ) );
      CHECK( static_cast<double>( delay( res.c, flat_profile( t ) ) ) <= *fb.delay );
      CHECK( static_cast<double>( res.c.size() ) <= *fb.size );

      // recursion inequalities on the recorded sub-builds
      for ( auto const& r : res.log )
      {
        if ( r.n < 3 )
        {
          continue;
        }
        auto const b = structural_bound_rsw( r );
        CHECK( r.delay <= b.delay );
        CHECK( r.size <= b.size );
      }
    }
  }
}

TEST_CASE( "prefix with depth budget: bounds and function" )
{
  for ( uint32_t n : { 1u, 2u, 3u, 4u, 5u, 8u, 11u, 16u } )
  {
    uint32_t const logn = n <= 1 ? 0 : static_cast<uint32_t>( ceil_log2( weight_t( n ) ) );
    for ( uint32_t f = 0; f <= logn; ++f )
    {
      auto const c = ladner_fischer( n, f );
      CHECK( all_and_gates( c ) );
      CHECK( depth( c ) <= int64_t( logn + f ) );
      CHECK( static_cast<double>( c.size() ) <= 2.0 * ( 1.0 + std::pow( 2.0, -double( f ) ) ) * n );
      CHECK( check_equivalence( c, and_prefix_oracle() ).equivalent );
    }
  }

  auto const c1 = ladner_fischer( 1, 0 );
  CHECK( c1.size() == 0 );

  auto const c8 = ladner_fischer( 8, 3 );
  CHECK( depth( c8 ) <= 6 );
  CHECK( c8.size() <= 18 );

  CHECK_THROWS_AS( ladner_fischer( 4, 3 ), std::invalid_argument );
}

TEST_CASE( "prefix outputs are tagged in order" )
{
  auto const c = rsw_prefix( std::vector<int64_t>( 5, 0 ) ).c;
  REQUIRE( c.outputs().size() == 5 );
  CHECK( c.outputs()[0].tag == "out1" );
  CHECK( c.outputs()[4].tag == "out5" );
}

TEST_CASE( "prefix delay never beats the weight lower bound" )
{
  std::mt19937_64 rng( 31 );
  for ( int iter = 0; iter < 20; ++iter )
  {
    uint32_t const n = 2 + rng() % 40;
    std::vector<int64_t> t( n );
    for ( auto& v : t )
    {
      v = static_cast<int64_t>( rng() % 10 );
    }
    auto const c = rsw_prefix( t ).c;
    CHECK( delay( c, flat_profile( t ) ) >= lower_bound_aop( weight_of( t ) ) );
  }
}
