#include <ulg/classify.hpp>
#include <ulg/closure.hpp>

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

using namespace ulg;

TEST_CASE( "Post-class predicates match brute-force definitions", "[classify][oracle]" )
{
  for ( auto n = 1u; n <= 4u; ++n )
  {
    for ( uint64_t code = 0u; code <= truth_table::row_mask( n ); ++code )
    {
      truth_table const tt( n, code );
      REQUIRE( preserves_zero( tt ) == oracle::t0( code ) );
      REQUIRE( preserves_one( tt ) == oracle::t1( n, code ) );
      REQUIRE( is_self_dual( tt ) == oracle::self_dual( n, code ) );
      REQUIRE( is_monotone( tt ) == oracle::monotone( n, code ) );
      REQUIRE( is_affine( tt ) == oracle::affine( n, code ) );
    }
  }
}

TEST_CASE( "algebraic normal form", "[classify]" )
{
  /* A xor B: monomials A and B; AND: monomial AB; NAND: 1 xor AB */
  CHECK( algebraic_normal_form( truth_table( 2, 0x6 ) ) == 0b0110u );
  CHECK( algebraic_normal_form( truth_table( 2, 0x8 ) ) == 0b1000u );
  CHECK( algebraic_normal_form( truth_table( 2, 0x7 ) ) == 0b1001u );
}

TEST_CASE( "verdicts on named gates", "[classify]" )
{
  auto const c = classify( decode_hex( "2B" ) );
  CHECK( c.self_dual );
  CHECK_FALSE( c.preserves_zero );
  CHECK_FALSE( c.preserves_one );
  CHECK( c.alone == verdict::non_universal );

  CHECK( classify_alone( truth_table( 2, 0x7 ) ) == verdict::universal );
  CHECK( classify_alone( truth_table( 2, 0x1 ) ) == verdict::universal );
  CHECK( classify_alone( truth_table( 2, 0x8 ) ) == verdict::non_universal );
  CHECK( classify_with_constants( truth_table( 2, 0x2 ) ) == verdict::universal );
  CHECK( classify_with_constants( truth_table( 2, 0x6 ) ) == verdict::non_universal );
  CHECK( classify_with_constants( decode_hex( "E8" ) ) == verdict::non_universal );
  CHECK( classify_alone( decode_hex( "01" ) ) == verdict::universal );

  CHECK( to_string( verdict::universal ) == "universal" );
  CHECK( to_string( fast_track_result::inconclusive ) == "inconclusive" );
}

TEST_CASE( "verdicts agree with the closure oracle", "[classify][oracle]" )
{
  for ( auto n = 2u; n <= 3u; ++n )
  {
    auto const full = std::size_t{ 1 } << ( 1u << n );
    for ( uint64_t code = 0u; code <= truth_table::row_mask( n ); ++code )
    {
      truth_table const tt( n, code );
      auto const& plain = oracle::all_closures( n, false )[code];
      auto const& with = oracle::all_closures( n, true )[code];
      REQUIRE( ( classify_alone( tt ) == verdict::universal ) == ( plain.realized.size() == full ) );
      REQUIRE( ( classify_with_constants( tt ) == verdict::universal ) == ( with.realized.size() == full ) );
    }
  }
}

TEST_CASE( "algorithm 1 row scan agrees with the flag classifier", "[classify]" )
{
  for ( auto n = 1u; n <= 4u; ++n )
  {
    for ( uint64_t code = 0u; code <= truth_table::row_mask( n ); ++code )
    {
      truth_table const tt( n, code );
      REQUIRE( algorithm1_scan( tt ) == classify_alone( tt ) );
    }
  }
}

TEST_CASE( "verdicts are invariant under duality and relabeling", "[classify][property]" )
{
  for ( auto n = 2u; n <= 3u; ++n )
  {
    std::vector<uint32_t> p( n );
    std::iota( p.begin(), p.end(), 0u );
    std::vector<variable_permutation> perms;
    do
      perms.emplace_back( p );
    while ( std::next_permutation( p.begin(), p.end() ) );

    for ( uint64_t code = 0u; code <= truth_table::row_mask( n ); ++code )
    {
      truth_table const tt( n, code );
      auto const c = classify( tt );
      auto const d = classify( dual( tt ) );
      REQUIRE( c.alone == d.alone );
      REQUIRE( c.with_constants == d.with_constants );
      REQUIRE( c.preserves_zero == d.preserves_one );
      REQUIRE( c.self_dual == d.self_dual );
      for ( auto const& perm : perms )
      {
        auto const q = classify( permute_variables( tt, perm ) );
        REQUIRE( q.alone == c.alone );
        REQUIRE( q.with_constants == c.with_constants );
      }
    }
  }
}

TEST_CASE( "self-dual gates outside T0 and T1", "[classify]" )
{
  std::vector<uint64_t> expected{ 2u, 8u, 128u };
  for ( auto n = 2u; n <= 4u; ++n )
  {
    uint64_t count = 0u;
    for ( uint64_t code = 0u; code <= truth_table::row_mask( n ); ++code )
    {
      auto const c = classify( truth_table( n, code ) );
      if ( !c.preserves_zero && !c.preserves_one && c.self_dual )
        ++count;
    }
    CHECK( count == expected[n - 2u] );
  }
}

TEST_CASE( "hex fast track", "[classify]" )
{
  CHECK( hex_fast_track( decode_hex( "46" ) ) == fast_track_result::confirmed_universal_with_constants );
  CHECK( hex_fast_track( decode_hex( "85" ) ) == fast_track_result::inconclusive );
  CHECK( classify_with_constants( decode_hex( "85" ) ) == verdict::universal );
  CHECK( hex_fast_track( decode_hex( "E8" ) ) == fast_track_result::inconclusive );
  CHECK_THROWS_AS( hex_fast_track( truth_table( 2, 7 ) ), std::invalid_argument );

  uint64_t confirmed3 = 0u;
  for ( uint64_t code = 0u; code < 256u; ++code )
  {
    truth_table const tt( 3, code );
    if ( hex_fast_track( tt ) == fast_track_result::confirmed_universal_with_constants )
    {
      ++confirmed3;
      REQUIRE( classify_with_constants( tt ) == verdict::universal );
    }
  }
  CHECK( confirmed3 == 156u );

  uint64_t confirmed4 = 0u;
  for ( uint64_t code = 0u; code < 65536u; ++code )
  {
    truth_table const tt( 4, code );
    if ( hex_fast_track( tt ) == fast_track_result::confirmed_universal_with_constants )
    {
      ++confirmed4;
      REQUIRE( classify_with_constants( tt ) == verdict::universal );
    }
  }
  CHECK( confirmed4 == 64575u );
}

TEST_CASE( "fast track never contradicts the closure oracle at arity 3", "[classify][oracle]" )
{
  for ( uint64_t code = 0u; code < 256u; ++code )
  {
    if ( hex_fast_track( truth_table( 3, code ) ) == fast_track_result::confirmed_universal_with_constants )
      REQUIRE( oracle::all_closures( 3, true )[code].realized.size() == 256u );
  }
}
