#include <ulg/classify.hpp>

#include <array>
#include <bit>
#include <stdexcept>

namespace ulg
{

namespace
{

/* rows whose index has bit `shift` cleared, for a 64-row word */
constexpr std::array<uint64_t, 6> lower_rows = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull };

} // namespace

std::string_view to_string( verdict v )
{
  return v == verdict::universal ? "universal" : "non_universal";
}

std::string_view to_string( fast_track_result r )
{
  return r == fast_track_result::confirmed_universal_with_constants ? "confirmed" : "inconclusive";
}

bool preserves_zero( truth_table const& tt )
{
  return !tt.get_bit( 0u );
}

bool preserves_one( truth_table const& tt )
{
  return tt.get_bit( tt.num_bits() - 1u );
}

bool is_self_dual( truth_table const& tt )
{
  return dual( tt ) == tt;
}

bool is_monotone( truth_table const& tt )
{
  auto const bits = tt.code();
  for ( auto shift = 0u; shift < tt.num_vars(); ++shift )
  {
    auto const m = lower_rows[shift] & tt.mask();
    auto const off = bits & m;
    auto const on = ( bits >> ( 1u << shift ) ) & m;
    if ( ( off & ~on ) != 0u )
      return false;
  }
  return true;
}

uint64_t algebraic_normal_form( truth_table const& tt )
{
  auto anf = tt.code();
  for ( auto shift = 0u; shift < tt.num_vars(); ++shift )
  {
    anf ^= ( anf & lower_rows[shift] ) << ( 1u << shift );
  }
  return anf & tt.mask();
}

bool is_affine( truth_table const& tt )
{
  auto anf = algebraic_normal_form( tt );
  while ( anf != 0u )
  {
    auto const monomial = static_cast<uint32_t>( std::countr_zero( anf ) );
    if ( std::popcount( monomial ) > 1 )
      return false;
    anf &= anf - 1u;
  }
  return true;
}

verdict classify_alone( truth_table const& tt )
{
  return ( !preserves_zero( tt ) && !preserves_one( tt ) && !is_self_dual( tt ) ) ? verdict::universal : verdict::non_universal;
}

verdict classify_with_constants( truth_table const& tt )
{
  return ( !is_monotone( tt ) && !is_affine( tt ) ) ? verdict::universal : verdict::non_universal;
}

classification classify( truth_table const& tt )
{
  classification c;
  c.gate = tt;
  c.preserves_zero = preserves_zero( tt );
  c.preserves_one = preserves_one( tt );
  c.self_dual = is_self_dual( tt );
  c.monotone = is_monotone( tt );
  c.affine = is_affine( tt );
  c.alone = ( !c.preserves_zero && !c.preserves_one && !c.self_dual ) ? verdict::universal : verdict::non_universal;
  c.with_constants = ( !c.monotone && !c.affine ) ? verdict::universal : verdict::non_universal;
  return c;
}

verdict algorithm1_scan( truth_table const& tt )
{
  auto const m = tt.num_bits();
  auto const row = [&]( uint32_t i ) { return tt.get_bit( i ) ? 1 : 0; };

  uint32_t i = 1u;
  if ( row( 0u ) == 1 && row( m - 1u ) == 0 )
  {
    while ( i <= m / 2u )
    {
      if ( row( i ) == row( m - i - 1u ) )
      {
        return verdict::universal;
      }
      else
      {
        i = i + 1u;
      }
    }
  }
  return verdict::non_universal;
}

fast_track_result hex_fast_track( truth_table const& tt )
{
  auto const n = tt.num_vars();
  if ( n < 3u )
  {
    throw std::invalid_argument( "hex fast track needs arity 3 or more" );
  }

  if ( n == 3u )
  {
    constexpr uint32_t template_gates = ( 1u << 0x1 ) | ( 1u << 0x2 ) | ( 1u << 0x4 ) | ( 1u << 0x7 ) | ( 1u << 0xB ) | ( 1u << 0xD );
    for ( auto digit = 0u; digit < 2u; ++digit )
    {
      auto const value = static_cast<uint32_t>( ( tt.code() >> ( 4u * digit ) ) & 0xFu );
      if ( ( template_gates >> value ) & 1u )
        return fast_track_result::confirmed_universal_with_constants;
    }
    return fast_track_result::inconclusive;
  }

  for ( auto value : { false, true } )
  {
    if ( classify_with_constants( cofactor( tt, 0u, value ) ) == verdict::universal )
      return fast_track_result::confirmed_universal_with_constants;
  }
  return fast_track_result::inconclusive;
}

} // namespace ulg
