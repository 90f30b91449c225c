#include <ulg/truth_table.hpp>

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

using namespace ulg;

TEST_CASE( "bit convention puts A on the most significant row bit", "[truth_table]" )
{
  CHECK( encode_hex( projection( 2, 0 ) ) == "C" );
  CHECK( encode_hex( projection( 2, 1 ) ) == "A" );
  CHECK( encode_hex( projection( 3, 0 ) ) == "F0" );
  CHECK( encode_hex( projection( 3, 2 ) ) == "AA" );

  auto const a = projection( 3, 0 ), b = projection( 3, 1 ), c = projection( 3, 2 );
  auto const majority = ( a.code() & b.code() ) | ( a.code() & c.code() ) | ( b.code() & c.code() );
  CHECK( encode_hex( truth_table( 3, majority ) ) == "E8" );

  auto const nor = ~( projection( 2, 0 ).code() | projection( 2, 1 ).code() ) & 0xFu;
  auto const nand = ~( projection( 2, 0 ).code() & projection( 2, 1 ).code() ) & 0xFu;
  CHECK( encode_hex( truth_table( 2, nor ) ) == "1" );
  CHECK( encode_hex( truth_table( 2, nand ) ) == "7" );
}

TEST_CASE( "hex decoding", "[truth_table]" )
{
  CHECK( decode_hex( "e8", 3 ) == truth_table( 3, 0xE8 ) );
  CHECK( decode_hex( "0F", 3 ).code() == 0x0F );
  CHECK( decode_hex( "4685" ).num_vars() == 4u );
  CHECK( decode_hex( "7" ).num_vars() == 2u );
  CHECK( decode_hex( "2B" ).num_vars() == 3u );
  CHECK( encode_hex( truth_table( 1, 2 ) ) == "2" );
  CHECK( encode_hex( truth_table( 4, 0x3 ) ) == "0003" );

  CHECK_THROWS_AS( decode_hex( "F", 3 ), std::invalid_argument );
  CHECK_THROWS_AS( decode_hex( "0G", 3 ), std::invalid_argument );
  CHECK_THROWS_AS( decode_hex( "", 2 ), std::invalid_argument );
  CHECK_THROWS_AS( decode_hex( "123" ), std::invalid_argument );
  CHECK_THROWS_AS( decode_hex( "4", 1 ), std::invalid_argument );
  CHECK_THROWS_AS( truth_table( 7, 0 ), std::invalid_argument );
  CHECK_THROWS_AS( truth_table( 2, 0x10 ), std::invalid_argument );
}

TEST_CASE( "hex round trip for every arity", "[truth_table][property]" )
{
  std::mt19937_64 rng( 7 );
  for ( auto n = 1u; n <= 6u; ++n )
  {
    for ( auto i = 0; i < 2000; ++i )
    {
      auto const tt = truth_table( n, rng() & truth_table::row_mask( n ) );
      auto const text = encode_hex( tt );
      REQUIRE( text.size() == hex_digits( n ) );
      REQUIRE( decode_hex( text, n ) == tt );
      if ( n >= 2u )
        REQUIRE( decode_hex( text ) == tt );
    }
  }
}

TEST_CASE( "evaluate and row_index agree with the code", "[truth_table]" )
{
  auto const tt = decode_hex( "E8", 3 );
  for ( auto r = 0u; r < 8u; ++r )
  {
    std::array<uint8_t, 3> x{ static_cast<uint8_t>( ( r >> 2 ) & 1u ), static_cast<uint8_t>( ( r >> 1 ) & 1u ), static_cast<uint8_t>( r & 1u ) };
    CHECK( row_index( x ) == r );
    CHECK( evaluate( tt, x ) == ( std::popcount( r ) >= 2 ) );
  }
}

TEST_CASE( "cofactors", "[truth_table]" )
{
  CHECK( cofactor( decode_hex( "85" ), 0, false ) == truth_table( 2, 0x5 ) );
  CHECK( cofactor( decode_hex( "85" ), 0, true ) == truth_table( 2, 0x8 ) );
  CHECK( cofactor( decode_hex( "46" ), 0, false ) == truth_table( 2, 0x6 ) );
  CHECK( cofactor( decode_hex( "46" ), 0, true ) == truth_table( 2, 0x4 ) );
  CHECK_THROWS_AS( cofactor( truth_table( 1, 1 ), 0, false ), std::invalid_argument );
  CHECK_THROWS_AS( cofactor( truth_table( 3, 1 ), 3, false ), std::invalid_argument );
}

TEST_CASE( "Shannon expansion reassembles every table", "[truth_table][property]" )
{
  for ( auto n = 2u; n <= 3u; ++n )
  {
    for ( uint64_t code = 0u; code <= truth_table::row_mask( n ); ++code )
    {
      truth_table const tt( n, code );
      for ( auto v = 0u; v < n; ++v )
      {
        auto const lo = cofactor( tt, v, false ), hi = cofactor( tt, v, true );
        /* lift the cofactors back to n variables, independent of v */
        uint64_t lifted_lo = 0u, lifted_hi = 0u;
        for ( auto r = 0u; r < tt.num_bits(); ++r )
        {
          auto const high = r >> ( n - v );
          auto const low = r & ( ( 1u << ( n - 1u - v ) ) - 1u );
          auto const sub = ( high << ( n - 1u - v ) ) | low;
          lifted_lo |= uint64_t{ lo.get_bit( sub ) } << r;
          lifted_hi |= uint64_t{ hi.get_bit( sub ) } << r;
        }
        auto const x = projection( n, v ).code();
        REQUIRE( ( ( ~x & lifted_lo ) | ( x & lifted_hi ) ) == code );
      }
    }
  }
}

TEST_CASE( "dual is an involution", "[truth_table][property]" )
{
  CHECK( dual( truth_table( 2, 0x7 ) ) == truth_table( 2, 0x1 ) );
  CHECK( dual( decode_hex( "E8" ) ) == decode_hex( "E8" ) );
  for ( auto n = 1u; n <= 4u; ++n )
  {
    for ( uint64_t code = 0u; code <= truth_table::row_mask( n ); ++code )
    {
      truth_table const tt( n, code );
      REQUIRE( dual( dual( tt ) ) == tt );
    }
  }
}

TEST_CASE( "variable permutations", "[truth_table]" )
{
  auto const d_front = variable_permutation::to_front( 4, std::vector<uint32_t>{ 3 } );
  CHECK( encode_hex( permute_variables( decode_hex( "4685" ), d_front ) ) == "18A3" );
  CHECK( permute_variables( decode_hex( "4685" ), variable_permutation::identity( 4 ) ) == decode_hex( "4685" ) );
  CHECK( permute_variables( truth_table( 2, 0x4 ), variable_permutation( { 1, 0 } ) ) == truth_table( 2, 0x2 ) );
  CHECK_THROWS_AS( variable_permutation( { 0, 0 } ), std::invalid_argument );
  CHECK_THROWS_AS( variable_permutation( { 0, 2 } ), std::invalid_argument );
  CHECK_THROWS_AS( permute_variables( truth_table( 3, 1 ), variable_permutation::identity( 2 ) ), std::invalid_argument );
}

TEST_CASE( "permute_variables is a group action", "[truth_table][property]" )
{
  std::mt19937_64 rng( 11 );
  for ( auto n = 2u; n <= 5u; ++n )
  {
    std::vector<uint32_t> base( n );
    std::iota( base.begin(), base.end(), 0u );
    for ( auto i = 0; i < 300; ++i )
    {
      auto p = base, q = base;
      std::shuffle( p.begin(), p.end(), rng );
      std::shuffle( q.begin(), q.end(), rng );
      variable_permutation const pp( p ), qq( q );
      truth_table const tt( n, rng() & truth_table::row_mask( n ) );

      REQUIRE( permute_variables( permute_variables( tt, pp ), qq ) == permute_variables( tt, pp.followed_by( qq ) ) );
      REQUIRE( permute_variables( permute_variables( tt, pp ), pp.inverse() ) == tt );
      REQUIRE( permute_variables( tt, variable_permutation::identity( n ) ) == tt );

      /* old variable k becomes variable p[k] */
      for ( auto k = 0u; k < n; ++k )
        REQUIRE( permute_variables( projection( n, k ), pp ) == projection( n, p[k] ) );
    }
  }
}

TEST_CASE( "compose agrees with row-wise evaluation", "[truth_table][property]" )
{
  std::mt19937_64 rng( 3 );
  for ( auto k = 1u; k <= 3u; ++k )
  {
    for ( uint64_t gate = 0u; gate <= truth_table::row_mask( k ); ++gate )
    {
      for ( auto n = 1u; n <= 3u; ++n )
      {
        std::vector<truth_table> args;
        std::vector<uint64_t> raw;
        for ( auto i = 0u; i < k; ++i )
        {
          args.emplace_back( n, rng() & truth_table::row_mask( n ) );
          raw.push_back( args.back().code() );
        }
        auto const composed = compose( truth_table( k, gate ), args );
        REQUIRE( composed.num_vars() == n );
        REQUIRE( composed.code() == oracle::apply( k, gate, raw, n ) );
      }
    }
  }
  std::vector<truth_table> const mismatched{ truth_table( 2, 1 ), truth_table( 3, 1 ) };
  CHECK_THROWS_AS( compose( truth_table( 2, 7 ), mismatched ), std::invalid_argument );
  std::vector<truth_table> const too_few{ truth_table( 2, 1 ) };
  CHECK_THROWS_AS( compose( truth_table( 2, 7 ), too_few ), std::invalid_argument );
}

TEST_CASE( "variable names", "[truth_table]" )
{
  CHECK( variable_name( 0 ) == "A" );
  CHECK( variable_name( 3 ) == "D" );
  CHECK( parse_variable( "c" ) == 2u );
  CHECK( parse_variable( "1" ) == 1u );
  CHECK_THROWS_AS( parse_variable( "" ), std::invalid_argument );
}
