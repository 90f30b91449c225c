#include <ulg/mux.hpp>

#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace ulg
{

mux_circuit mux_decompose( truth_table const& tt, std::vector<uint32_t> const& select_vars )
{
  auto const n = tt.num_vars();
  auto const k = static_cast<uint32_t>( select_vars.size() );
  if ( k == 0u )
  {
    throw std::invalid_argument( "at least one select variable is required" );
  }
  if ( k + 2u > n )
  {
    throw std::invalid_argument( fmt::format( "{} select variables leave leaves below arity 2 for a gate of arity {}", k, n ) );
  }

  mux_circuit mux;
  mux.arity = n;
  mux.select_vars = select_vars;
  mux.permuted = permute_variables( tt, variable_permutation::to_front( n, select_vars ) );

  auto const leaf_arity = n - k;
  auto const leaf_bits = 1u << leaf_arity;
  auto const leaf_mask = truth_table::row_mask( leaf_arity );
  for ( auto s = 0u; s < ( 1u << k ); ++s )
  {
    mux.leaves.emplace_back( leaf_arity, ( mux.permuted.code() >> ( s * leaf_bits ) ) & leaf_mask );
  }
  return mux;
}

truth_table recompose( mux_circuit const& mux )
{
  auto const k = static_cast<uint32_t>( mux.select_vars.size() );
  if ( k == 0u || mux.leaves.size() != ( std::size_t{ 1 } << k ) )
  {
    throw std::invalid_argument( fmt::format( "{} select variables need {} leaves, got {}", k, 1u << k, mux.leaves.size() ) );
  }
  auto const leaf_arity = mux.leaves.front().num_vars();
  if ( leaf_arity + k != mux.arity )
  {
    throw std::invalid_argument( "leaf arity does not match the gate arity" );
  }
  uint64_t code = 0u;
  for ( auto s = 0u; s < mux.leaves.size(); ++s )
  {
    if ( mux.leaves[s].num_vars() != leaf_arity )
    {
      throw std::invalid_argument( "leaves differ in arity" );
    }
    code |= mux.leaves[s].code() << ( s * ( 1u << leaf_arity ) );
  }
  auto const perm = variable_permutation::to_front( mux.arity, mux.select_vars );
  return permute_variables( truth_table( mux.arity, code ), perm.inverse() );
}

fast_track_result universality_from_leaves( mux_circuit const& mux )
{
  for ( auto const& leaf : mux.leaves )
  {
    if ( leaf.num_vars() != 2u )
    {
      throw std::invalid_argument( "leaf universality needs two-input leaves" );
    }
  }
  for ( auto const& leaf : mux.leaves )
  {
    switch ( leaf.code() )
    {
    case 0x1:
    case 0x2:
    case 0x4:
    case 0x7:
    case 0xB:
    case 0xD:
      return fast_track_result::confirmed_universal_with_constants;
    default:
      break;
    }
  }
  return fast_track_result::inconclusive;
}

nlohmann::ordered_json to_json( mux_circuit const& mux )
{
  nlohmann::ordered_json j;
  j["select"] = mux.select_vars;
  auto leaves = nlohmann::ordered_json::array();
  for ( auto const& leaf : mux.leaves )
    leaves.push_back( encode_hex( leaf ) );
  j["leaves"] = std::move( leaves );
  return j;
}

mux_circuit mux_from_json( nlohmann::json const& j )
{
  try
  {
    mux_circuit mux;
    mux.select_vars = j.at( "select" ).get<std::vector<uint32_t>>();
    auto const k = static_cast<uint32_t>( mux.select_vars.size() );
    auto const& leaves = j.at( "leaves" );
    if ( k == 0u || leaves.size() != ( std::size_t{ 1 } << k ) )
    {
      throw std::invalid_argument( "leaf count does not match the select variables" );
    }
    for ( auto const& leaf : leaves )
      mux.leaves.push_back( decode_hex( leaf.get<std::string>() ) );
    mux.arity = mux.leaves.front().num_vars() + k;
    for ( auto v : mux.select_vars )
    {
      if ( v >= mux.arity )
        throw std::invalid_argument( fmt::format( "select variable {} outside arity {}", v, mux.arity ) );
    }
    mux.permuted = permute_variables( recompose( mux ), variable_permutation::to_front( mux.arity, mux.select_vars ) );
    return mux;
  }
  catch ( nlohmann::json::exception const& e )
  {
    throw std::invalid_argument( fmt::format( "malformed multiplexer JSON: {}", e.what() ) );
  }
}

std::string to_dot( mux_circuit const& mux )
{
  std::ostringstream os;
  auto const k = mux.select_vars.size();
  os << "digraph mux {\n  rankdir=LR;\n";
  os << fmt::format( "  mux [shape=trapezium,orientation=270,label=\"{}:1 MUX\"];\n", 1u << k );
  for ( auto s = 0u; s < mux.leaves.size(); ++s )
  {
    os << fmt::format( "  leaf{} [shape=box,label=\"{}\"];\n", s, encode_hex( mux.leaves[s] ) );
    os << fmt::format( "  leaf{} -> mux [label=\"{}\"];\n", s, fmt::format( "{:0{}b}", s, k ) );
  }
  for ( auto const v : mux.select_vars )
  {
    os << fmt::format( "  sel{0} [shape=plaintext,label=\"{0}\"];\n  sel{0} -> mux [style=dashed];\n", variable_name( v ) );
  }
  os << "  out [shape=plaintext,label=\"f\"];\n  mux -> out;\n}\n";
  return os.str();
}

} // namespace ulg
