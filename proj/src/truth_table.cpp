#include <ulg/truth_table.hpp>

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

namespace ulg
{

namespace
{

void check_arity( uint32_t arity )
{
  if ( arity < 1u || arity > max_arity )
  {
    throw std::invalid_argument( fmt::format( "arity {} outside 1..{}", arity, max_arity ) );
  }
}

int hex_value( char c )
{
  if ( c >= '0' && c <= '9' )
    return c - '0';
  if ( c >= 'a' && c <= 'f' )
    return c - 'a' + 10;
  if ( c >= 'A' && c <= 'F' )
    return c - 'A' + 10;
  return -1;
}

/* position of variable `var` inside the row index */
inline uint32_t shift_of( uint32_t arity, uint32_t var )
{
  return arity - 1u - var;
}

} // namespace

truth_table::truth_table( uint32_t arity, uint64_t code )
    : arity_( arity ), code_( code )
{
  check_arity( arity );
  if ( ( code & ~row_mask( arity ) ) != 0u )
  {
    throw std::invalid_argument( fmt::format( "code {:#x} does not fit arity {}", code, arity ) );
  }
}

variable_permutation::variable_permutation( std::vector<uint32_t> mapping )
    : mapping_( std::move( mapping ) )
{
  std::vector<bool> seen( mapping_.size(), false );
  for ( auto v : mapping_ )
  {
    if ( v >= mapping_.size() || seen[v] )
    {
      throw std::invalid_argument( "variable mapping is not a permutation" );
    }
    seen[v] = true;
  }
}

variable_permutation variable_permutation::identity( uint32_t n )
{
  std::vector<uint32_t> m( n );
  for ( auto i = 0u; i < n; ++i )
    m[i] = i;
  return variable_permutation( std::move( m ) );
}

variable_permutation variable_permutation::to_front( uint32_t n, std::span<uint32_t const> front )
{
  std::vector<uint32_t> m( n, n );
  uint32_t next = 0u;
  for ( auto v : front )
  {
    if ( v >= n || m[v] != n )
    {
      throw std::invalid_argument( "select variables must be distinct and in range" );
    }
    m[v] = next++;
  }
  for ( auto v = 0u; v < n; ++v )
  {
    if ( m[v] == n )
      m[v] = next++;
  }
  return variable_permutation( std::move( m ) );
}

variable_permutation variable_permutation::inverse() const
{
  std::vector<uint32_t> m( mapping_.size() );
  for ( auto k = 0u; k < mapping_.size(); ++k )
    m[mapping_[k]] = k;
  return variable_permutation( std::move( m ) );
}

variable_permutation variable_permutation::followed_by( variable_permutation const& then ) const
{
  if ( then.size() != size() )
  {
    throw std::invalid_argument( "permutation sizes differ" );
  }
  std::vector<uint32_t> m( mapping_.size() );
  for ( auto k = 0u; k < mapping_.size(); ++k )
    m[k] = then.mapping_[mapping_[k]];
  return variable_permutation( std::move( m ) );
}

uint32_t hex_digits( uint32_t arity )
{
  check_arity( arity );
  return std::max( 1u, ( 1u << arity ) / 4u );
}

truth_table decode_hex( std::string_view text, uint32_t arity )
{
  auto const digits = hex_digits( arity );
  if ( text.size() != digits )
  {
    throw std::invalid_argument( fmt::format( "\"{}\" has {} hex digits, arity {} needs {}", text, text.size(), arity, digits ) );
  }
  uint64_t code = 0u;
  for ( auto c : text )
  {
    auto const v = hex_value( c );
    if ( v < 0 )
    {
      throw std::invalid_argument( fmt::format( "\"{}\" contains non-hex character '{}'", text, c ) );
    }
    code = ( code << 4u ) | static_cast<uint64_t>( v );
  }
  return truth_table( arity, code );
}

truth_table decode_hex( std::string_view text )
{
  switch ( text.size() )
  {
  case 1u:
    return decode_hex( text, 2u );
  case 2u:
    return decode_hex( text, 3u );
  case 4u:
    return decode_hex( text, 4u );
  case 8u:
    return decode_hex( text, 5u );
  case 16u:
    return decode_hex( text, 6u );
  default:
    throw std::invalid_argument( fmt::format( "cannot infer arity from {} hex digits in \"{}\"", text.size(), text ) );
  }
}

std::string encode_hex( truth_table const& tt )
{
  return fmt::format( "{:0{}X}", tt.code(), hex_digits( tt.num_vars() ) );
}

truth_table constant( uint32_t arity, bool value )
{
  return truth_table( arity, value ? truth_table::row_mask( arity ) : 0u );
}

truth_table projection( uint32_t arity, uint32_t var )
{
  check_arity( arity );
  if ( var >= arity )
  {
    throw std::invalid_argument( fmt::format( "variable {} out of range for arity {}", var, arity ) );
  }
  uint64_t code = 0u;
  auto const shift = shift_of( arity, var );
  for ( auto r = 0u; r < ( 1u << arity ); ++r )
  {
    if ( ( r >> shift ) & 1u )
      code |= uint64_t{ 1 } << r;
  }
  return truth_table( arity, code );
}

uint32_t row_index( std::span<uint8_t const> assignment )
{
  uint32_t r = 0u;
  for ( auto bit : assignment )
    r = ( r << 1u ) | ( bit ? 1u : 0u );
  return r;
}

bool evaluate( truth_table const& tt, std::span<uint8_t const> assignment )
{
  if ( assignment.size() != tt.num_vars() )
  {
    throw std::invalid_argument( fmt::format( "assignment of length {} for arity {}", assignment.size(), tt.num_vars() ) );
  }
  return tt.get_bit( row_index( assignment ) );
}

truth_table compose( truth_table const& gate, std::span<truth_table const> args )
{
  if ( args.size() != gate.num_vars() )
  {
    throw std::invalid_argument( fmt::format( "gate of arity {} applied to {} arguments", gate.num_vars(), args.size() ) );
  }
  auto const k = args.front().num_vars();
  for ( auto const& a : args )
  {
    if ( a.num_vars() != k )
    {
      throw std::invalid_argument( "composition arguments differ in arity" );
    }
  }
  uint64_t code = 0u;
  for ( auto r = 0u; r < ( 1u << k ); ++r )
  {
    uint32_t idx = 0u;
    for ( auto const& a : args )
      idx = ( idx << 1u ) | ( a.get_bit( r ) ? 1u : 0u );
    if ( gate.get_bit( idx ) )
      code |= uint64_t{ 1 } << r;
  }
  return truth_table( k, code );
}

truth_table cofactor( truth_table const& tt, uint32_t var, bool value )
{
  auto const n = tt.num_vars();
  if ( n < 2u )
  {
    throw std::invalid_argument( "cofactor of an arity-1 table would be a constant" );
  }
  if ( var >= n )
  {
    throw std::invalid_argument( fmt::format( "variable {} out of range for arity {}", var, n ) );
  }
  auto const shift = shift_of( n, var );
  auto const low_mask = ( 1u << shift ) - 1u;
  uint64_t code = 0u;
  for ( auto r = 0u; r < ( 1u << ( n - 1u ) ); ++r )
  {
    auto const full = ( ( r & ~low_mask ) << 1u ) | ( value ? ( 1u << shift ) : 0u ) | ( r & low_mask );
    if ( tt.get_bit( full ) )
      code |= uint64_t{ 1 } << r;
  }
  return truth_table( n - 1u, code );
}

truth_table dual( truth_table const& tt )
{
  auto const m = tt.num_bits();
  uint64_t code = 0u;
  for ( auto r = 0u; r < m; ++r )
  {
    if ( !tt.get_bit( m - 1u - r ) )
      code |= uint64_t{ 1 } << r;
  }
  return truth_table( tt.num_vars(), code );
}

truth_table permute_variables( truth_table const& tt, variable_permutation const& perm )
{
  auto const n = tt.num_vars();
  if ( perm.size() != n )
  {
    throw std::invalid_argument( fmt::format( "permutation of size {} for arity {}", perm.size(), n ) );
  }
  uint64_t code = 0u;
  for ( auto r_new = 0u; r_new < ( 1u << n ); ++r_new )
  {
    uint32_t r_old = 0u;
    for ( auto k = 0u; k < n; ++k )
    {
      auto const bit = ( r_new >> shift_of( n, perm[k] ) ) & 1u;
      r_old |= bit << shift_of( n, k );
    }
    if ( tt.get_bit( r_old ) )
      code |= uint64_t{ 1 } << r_new;
  }
  return truth_table( n, code );
}

std::string variable_name( uint32_t var )
{
  return std::string( 1u, static_cast<char>( 'A' + var ) );
}

uint32_t parse_variable( std::string_view name )
{
  if ( name.size() == 1u && name[0] >= 'A' && name[0] < static_cast<char>( 'A' + max_arity ) )
    return static_cast<uint32_t>( name[0] - 'A' );
  if ( name.size() == 1u && name[0] >= 'a' && name[0] < static_cast<char>( 'a' + max_arity ) )
    return static_cast<uint32_t>( name[0] - 'a' );
  uint32_t v = 0u;
  auto const [ptr, ec] = std::from_chars( name.data(), name.data() + name.size(), v );
  if ( ec != std::errc{} || ptr != name.data() + name.size() )
  {
    throw std::invalid_argument( fmt::format( "unknown variable \"{}\"", name ) );
  }
  return v;
}

} // namespace ulg
