#include <ulg/census.hpp>

#include <ulg/closure.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace ulg
{

namespace
{

census_row make_row( truth_table const& gate )
{
  census_row row;
  row.cls = classify( gate );
  if ( gate.num_vars() <= 3u )
  {
    row.closure_plain = generate_closure( gate, false ).output_count;
    row.closure_const = generate_closure( gate, true ).output_count;
  }
  if ( gate.num_vars() >= 3u )
  {
    row.fast_track = hex_fast_track( gate );
  }
  return row;
}

std::string flag( bool b )
{
  return b ? "1" : "0";
}

std::string trim( std::string_view s )
{
  auto const first = s.find_first_not_of( " \t\r" );
  if ( first == std::string_view::npos )
    return {};
  auto const last = s.find_last_not_of( " \t\r" );
  return std::string( s.substr( first, last - first + 1u ) );
}

std::vector<std::string> split( std::string const& line )
{
  std::vector<std::string> out;
  std::stringstream ss( line );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
    out.push_back( trim( item ) );
  if ( !line.empty() && line.back() == ',' )
    out.emplace_back();
  return out;
}

std::string upper( std::string s )
{
  std::transform( s.begin(), s.end(), s.begin(), []( unsigned char c ) { return static_cast<char>( std::toupper( c ) ); } );
  return s;
}

bool known_field( std::string const& field )
{
  static std::set<std::string> const fields = { "t0", "t1", "selfdual", "monotone", "affine", "universal_alone",
                                                "universal_with_constants", "closure_plain", "closure_const", "fast_track",
                                                "added_by_constants" };
  return fields.contains( field );
}

} // namespace

uint32_t default_thread_count()
{
  if ( auto const* env = std::getenv( "ULG_THREADS" ) )
  {
    auto const value = std::atoi( env );
    if ( value > 0 )
      return static_cast<uint32_t>( value );
  }
  return std::max( 1u, std::thread::hardware_concurrency() );
}

census_table enumerate_all( uint32_t arity, uint32_t threads )
{
  if ( arity < 2u || arity > 4u )
  {
    throw std::invalid_argument( fmt::format( "census arity {} outside 2..4", arity ) );
  }
  census_table table;
  table.arity = arity;
  auto const total = uint64_t{ 1 } << ( 1u << arity );
  table.rows.resize( total );

  if ( threads == 0u )
    threads = default_thread_count();
  threads = static_cast<uint32_t>( std::min<uint64_t>( threads, total ) );

  std::atomic<uint64_t> next{ 0u };
  auto work = [&]() {
    for ( auto code = next.fetch_add( 1u ); code < total; code = next.fetch_add( 1u ) )
      table.rows[code] = make_row( truth_table( arity, code ) );
  };
  if ( threads <= 1u )
  {
    work();
  }
  else
  {
    std::vector<std::jthread> pool;
    for ( auto i = 0u; i < threads; ++i )
      pool.emplace_back( work );
  }
  return table;
}

count_report universal_count( uint32_t n )
{
  if ( n < 2u || n > 16u )
  {
    throw std::invalid_argument( fmt::format( "N = {} outside 2..16", n ) );
  }
  count_report r;
  r.n = n;
  auto const rows = 1u << n;
  r.inputs = big_int( rows );
  r.gates = big_int( 1 ) << rows;
  r.unconstrained = r.gates >> 2u;
  r.self_dual = big_int( 1 ) << ( ( rows - 2u ) / 2u );
  r.universal = r.unconstrained - r.self_dual;
  r.ratio = big_rational( r.universal, r.gates );
  return r;
}

big_rational universal_ratio( uint32_t n )
{
  return universal_count( n ).ratio;
}

std::string to_fixed( big_rational const& value, uint32_t digits )
{
  big_int num = boost::multiprecision::numerator( value );
  big_int const den = boost::multiprecision::denominator( value );
  bool const negative = num < 0;
  if ( negative )
    num = -num;
  big_int scale = 1;
  for ( auto i = 0u; i < digits; ++i )
    scale *= 10;
  big_int const scaled = ( num * scale * 2 + den ) / ( den * 2 );
  big_int const whole = scaled / scale;
  big_int const frac = scaled % scale;

  auto frac_text = frac.str();
  if ( frac_text.size() < digits )
    frac_text.insert( 0u, digits - frac_text.size(), '0' );
  auto text = ( negative && scaled != 0 ? "-" : "" ) + whole.str();
  if ( digits > 0u )
    text += "." + frac_text;
  return text;
}

std::string field_value( census_row const& row, std::string const& field )
{
  auto const& c = row.cls;
  if ( field == "code" )
    return encode_hex( c.gate );
  if ( field == "t0" )
    return flag( c.preserves_zero );
  if ( field == "t1" )
    return flag( c.preserves_one );
  if ( field == "selfdual" )
    return flag( c.self_dual );
  if ( field == "monotone" )
    return flag( c.monotone );
  if ( field == "affine" )
    return flag( c.affine );
  if ( field == "universal_alone" )
    return flag( c.alone == verdict::universal );
  if ( field == "universal_with_constants" )
    return flag( c.with_constants == verdict::universal );
  if ( field == "added_by_constants" )
    return flag( c.with_constants == verdict::universal && c.alone != verdict::universal );
  if ( field == "closure_plain" )
    return row.closure_plain ? std::to_string( *row.closure_plain ) : "";
  if ( field == "closure_const" )
    return row.closure_const ? std::to_string( *row.closure_const ) : "";
  if ( field == "fast_track" )
    return row.fast_track ? std::string( to_string( *row.fast_track ) ) : "";
  throw std::invalid_argument( fmt::format( "unknown census field \"{}\"", field ) );
}

void write_report( census_table const& table, report_format format, std::ostream& os )
{
  if ( format == report_format::csv )
  {
    os << census_csv_header << '\n';
    auto const columns = split( census_csv_header );
    for ( auto const& row : table.rows )
    {
      for ( auto i = 0u; i < columns.size(); ++i )
      {
        if ( i != 0u )
          os << ',';
        os << field_value( row, columns[i] );
      }
      os << '\n';
    }
    return;
  }

  nlohmann::ordered_json j;
  j["arity"] = table.arity;
  auto rows = nlohmann::ordered_json::array();
  for ( auto const& row : table.rows )
  {
    auto const& c = row.cls;
    nlohmann::ordered_json r;
    r["code"] = encode_hex( c.gate );
    r["t0"] = c.preserves_zero;
    r["t1"] = c.preserves_one;
    r["selfdual"] = c.self_dual;
    r["monotone"] = c.monotone;
    r["affine"] = c.affine;
    r["universal_alone"] = c.alone == verdict::universal;
    r["universal_with_constants"] = c.with_constants == verdict::universal;
    r["closure_plain"] = row.closure_plain ? nlohmann::ordered_json( *row.closure_plain ) : nlohmann::ordered_json();
    r["closure_const"] = row.closure_const ? nlohmann::ordered_json( *row.closure_const ) : nlohmann::ordered_json();
    r["fast_track"] = row.fast_track ? nlohmann::ordered_json( to_string( *row.fast_track ) ) : nlohmann::ordered_json();
    rows.push_back( std::move( r ) );
  }
  j["rows"] = std::move( rows );
  os << j.dump( 2 ) << '\n';
}

void emit_report( census_table const& table, report_format format, std::filesystem::path const& destination )
{
  std::ofstream os( destination, std::ios::binary );
  if ( !os )
  {
    throw std::runtime_error( fmt::format( "cannot open {} for writing", destination.string() ) );
  }
  write_report( table, format, os );
  os.flush();
  if ( !os )
  {
    throw std::runtime_error( fmt::format( "failed writing {}", destination.string() ) );
  }
}

std::vector<divergence> diff_against_reference( census_table const& table, std::istream& reference )
{
  std::vector<std::string> header;
  std::map<std::string, std::string> defaults;
  std::map<uint64_t, std::vector<std::string>> listed;

  std::string line;
  uint32_t line_no = 0u;
  while ( std::getline( reference, line ) )
  {
    ++line_no;
    auto const text = trim( line );
    if ( text.empty() )
      continue;
    if ( text.starts_with( "#default" ) )
    {
      auto const spec = trim( std::string_view( text ).substr( 8u ) );
      auto const eq = spec.find( '=' );
      auto const field = trim( spec.substr( 0u, eq ) );
      if ( eq == std::string::npos || !known_field( field ) )
      {
        throw std::invalid_argument( fmt::format( "reference line {}: bad default \"{}\"", line_no, text ) );
      }
      defaults[field] = trim( spec.substr( eq + 1u ) );
      continue;
    }
    if ( text.front() == '#' )
      continue;

    auto cells = split( text );
    if ( header.empty() )
    {
      if ( cells.empty() || cells.front() != "code" )
      {
        throw std::invalid_argument( fmt::format( "reference line {}: header must start with \"code\"", line_no ) );
      }
      for ( auto i = 1u; i < cells.size(); ++i )
      {
        if ( !known_field( cells[i] ) )
          throw std::invalid_argument( fmt::format( "reference line {}: unknown field \"{}\"", line_no, cells[i] ) );
      }
      header = std::move( cells );
      continue;
    }
    if ( cells.size() != header.size() )
    {
      throw std::invalid_argument( fmt::format( "reference line {}: {} cells, header has {}", line_no, cells.size(), header.size() ) );
    }
    uint64_t code{};
    try
    {
      code = decode_hex( cells.front(), table.arity ).code();
    }
    catch ( std::invalid_argument const& e )
    {
      throw std::invalid_argument( fmt::format( "reference line {}: {}", line_no, e.what() ) );
    }
    if ( !listed.emplace( code, std::move( cells ) ).second )
    {
      throw std::invalid_argument( fmt::format( "reference line {}: duplicate code", line_no ) );
    }
  }
  if ( header.empty() )
  {
    throw std::invalid_argument( "reference has no header" );
  }

  auto normalize = []( std::string const& field, std::string value ) {
    return field == "fast_track" ? value : upper( std::move( value ) );
  };

  std::vector<divergence> out;
  for ( auto const& row : table.rows )
  {
    auto const code = row.gate().code();
    auto const hex = encode_hex( row.gate() );
    if ( auto it = listed.find( code ); it != listed.end() )
    {
      for ( auto i = 1u; i < header.size(); ++i )
      {
        auto const computed = field_value( row, header[i] );
        if ( normalize( header[i], it->second[i] ) != normalize( header[i], computed ) )
          out.push_back( { hex, header[i], it->second[i], computed } );
      }
    }
    else
    {
      for ( auto const& [field, expected] : defaults )
      {
        auto const computed = field_value( row, field );
        if ( normalize( field, expected ) != normalize( field, computed ) )
          out.push_back( { hex, field, expected, computed } );
      }
    }
  }
  return out;
}

std::vector<divergence> diff_against_reference( census_table const& table, std::filesystem::path const& reference )
{
  std::ifstream is( reference );
  if ( !is )
  {
    throw std::runtime_error( fmt::format( "cannot open reference {}", reference.string() ) );
  }
  try
  {
    return diff_against_reference( table, is );
  }
  catch ( std::invalid_argument const& e )
  {
    throw std::invalid_argument( fmt::format( "{}: {}", reference.string(), e.what() ) );
  }
}

} // namespace ulg
