#include <ulg/classify.hpp>
#include <ulg/mux.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace ulg;

namespace
{

std::vector<std::string> leaf_codes( mux_circuit const& m )
{
  std::vector<std::string> out;
  for ( auto const& leaf : m.leaves )
    out.push_back( encode_hex( leaf ) );
  return out;
}

} // namespace

TEST_CASE( "case-study decompositions", "[mux]" )
{
  auto const m85 = mux_decompose( decode_hex( "85" ), { 0 } );
  CHECK( leaf_codes( m85 ) == std::vector<std::string>{ "5", "8" } );
  CHECK( universality_from_leaves( m85 ) == fast_track_result::inconclusive );

  auto const m46 = mux_decompose( decode_hex( "46" ), { 0 } );
  CHECK( leaf_codes( m46 ) == std::vector<std::string>{ "6", "4" } );
  CHECK( universality_from_leaves( m46 ) == fast_track_result::confirmed_universal_with_constants );

  CHECK( universality_from_leaves( mux_decompose( decode_hex( "FF" ), { 0 } ) ) == fast_track_result::inconclusive );

  auto const m4685 = mux_decompose( decode_hex( "4685" ), { 0, 1 } );
  CHECK( leaf_codes( m4685 ) == std::vector<std::string>{ "5", "8", "6", "4" } );
  CHECK( m4685.permuted == decode_hex( "4685" ) );

  auto const on_d = mux_decompose( decode_hex( "4685" ), { 3 } );
  CHECK( encode_hex( on_d.permuted ) == "18A3" );
  CHECK( leaf_codes( on_d ) == std::vector<std::string>{ "A3", "18" } );
  CHECK( recompose( on_d ) == decode_hex( "4685" ) );
}

TEST_CASE( "invalid select lists", "[mux]" )
{
  auto const tt = decode_hex( "E8" );
  CHECK_THROWS_AS( mux_decompose( tt, {} ), std::invalid_argument );
  CHECK_THROWS_AS( mux_decompose( tt, { 0, 0 } ), std::invalid_argument );
  CHECK_THROWS_AS( mux_decompose( tt, { 3 } ), std::invalid_argument );
  CHECK_THROWS_AS( mux_decompose( tt, { 0, 1 } ), std::invalid_argument );
  CHECK_THROWS_AS( mux_decompose( truth_table( 2, 0x7 ), { 0 } ), std::invalid_argument );
  CHECK_THROWS_AS( universality_from_leaves( mux_decompose( decode_hex( "4685" ), { 0 } ) ), std::invalid_argument );
}

TEST_CASE( "recompose inverts decomposition", "[mux][property]" )
{
  for ( uint64_t code = 0u; code < 256u; ++code )
  {
    truth_table const tt( 3, code );
    for ( auto v = 0u; v < 3u; ++v )
      REQUIRE( recompose( mux_decompose( tt, { v } ) ) == tt );
  }
  for ( uint64_t code = 0u; code < 65536u; code += 97u )
  {
    truth_table const tt( 4, code );
    REQUIRE( recompose( mux_decompose( tt, { 3, 1 } ) ) == tt );
    REQUIRE( recompose( mux_decompose( tt, { 2 } ) ) == tt );
  }
}

TEST_CASE( "leaves on the leading variable concatenate to the encoding", "[mux][property]" )
{
  for ( auto n = 3u; n <= 4u; ++n )
  {
    for ( uint64_t code = 0u; code <= truth_table::row_mask( n ); code += ( n == 4u ? 13u : 1u ) )
    {
      truth_table const tt( n, code );
      auto const m = mux_decompose( tt, { 0 } );
      REQUIRE( encode_hex( m.leaves[1] ) + encode_hex( m.leaves[0] ) == encode_hex( tt ) );
    }
  }
}

TEST_CASE( "confirmed leaves imply universality with constants", "[mux][property]" )
{
  uint64_t confirmed = 0u;
  for ( uint64_t code = 0u; code < 256u; ++code )
  {
    truth_table const tt( 3, code );
    for ( auto v = 0u; v < 3u; ++v )
    {
      if ( universality_from_leaves( mux_decompose( tt, { v } ) ) == fast_track_result::confirmed_universal_with_constants )
      {
        ++confirmed;
        REQUIRE( classify_with_constants( tt ) == verdict::universal );
      }
    }
    auto const leading = universality_from_leaves( mux_decompose( tt, { 0 } ) ) == fast_track_result::confirmed_universal_with_constants;
    auto const track = hex_fast_track( tt ) == fast_track_result::confirmed_universal_with_constants;
    REQUIRE( leading == track );
  }
  CHECK( confirmed > 0u );
}

TEST_CASE( "mux serialization", "[mux]" )
{
  auto const m = mux_decompose( decode_hex( "4685" ), { 0, 1 } );
  auto const j = to_json( m );
  CHECK( j.dump() == R"({"select":[0,1],"leaves":["5","8","6","4"]})" );
  auto const back = mux_from_json( nlohmann::json::parse( j.dump() ) );
  CHECK( recompose( back ) == decode_hex( "4685" ) );
  CHECK( to_dot( m ).find( "digraph" ) != std::string::npos );
}
