#include <ulg/cli.hpp>

#include <ulg/census.hpp>
#include <ulg/classify.hpp>
#include <ulg/closure.hpp>
#include <ulg/mux.hpp>
#include <ulg/truth_table.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace ulg::cli
{

namespace
{

using json = nlohmann::ordered_json;

struct usage_error : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

struct gate_options
{
  std::string gate;
  std::optional<uint32_t> arity;

  truth_table parse( std::string const& text ) const
  {
    try
    {
      return arity ? decode_hex( text, *arity ) : decode_hex( text );
    }
    catch ( std::invalid_argument const& e )
    {
      throw usage_error( e.what() );
    }
  }

  json input() const
  {
    json j;
    j["gate"] = gate;
    j["arity"] = arity ? json( *arity ) : json();
    return j;
  }
};

std::string yes_no( bool b )
{
  return b ? "true" : "false";
}

std::string join_hex( std::vector<uint64_t> const& codes, uint32_t arity )
{
  std::string out;
  for ( auto c : codes )
  {
    if ( !out.empty() )
      out += ' ';
    out += encode_hex( truth_table( arity, c ) );
  }
  return out;
}

json hex_list( std::vector<uint64_t> const& codes, uint32_t arity )
{
  auto j = json::array();
  for ( auto c : codes )
    j.push_back( encode_hex( truth_table( arity, c ) ) );
  return j;
}

struct outcome
{
  json input;
  json result;
  std::string text;
};

outcome do_classify( gate_options const& g )
{
  auto const tt = g.parse( g.gate );
  auto const c = classify( tt );
  outcome o;
  o.input = g.input();
  auto& r = o.result;
  r["gate"] = encode_hex( tt );
  r["arity"] = tt.num_vars();
  r["t0"] = c.preserves_zero;
  r["t1"] = c.preserves_one;
  r["selfdual"] = c.self_dual;
  r["monotone"] = c.monotone;
  r["affine"] = c.affine;
  r["alone"] = to_string( c.alone );
  r["with_constants"] = to_string( c.with_constants );
  r["algorithm1"] = to_string( algorithm1_scan( tt ) );
  std::optional<fast_track_result> fast;
  if ( tt.num_vars() >= 3u )
    fast = hex_fast_track( tt );
  r["fast_track"] = fast ? json( to_string( *fast ) ) : json();

  o.text = fmt::format( "gate: {} (arity {})\n", encode_hex( tt ), tt.num_vars() );
  o.text += fmt::format( "zero-preserving: {}\none-preserving: {}\nself-dual: {}\nmonotone: {}\naffine: {}\n",
                         yes_no( c.preserves_zero ), yes_no( c.preserves_one ), yes_no( c.self_dual ), yes_no( c.monotone ), yes_no( c.affine ) );
  o.text += fmt::format( "alone: {}\nwith constants: {}\nalgorithm1: {}\n", to_string( c.alone ), to_string( c.with_constants ),
                         to_string( algorithm1_scan( tt ) ) );
  if ( fast )
    o.text += fmt::format( "fast track: {}\n", to_string( *fast ) );
  return o;
}

outcome do_closure( gate_options const& g, bool constants, std::optional<uint64_t> budget )
{
  auto const tt = g.parse( g.gate );
  auto const report = generate_closure( tt, closure_options{ constants, budget } );
  auto const members = report.realized.members();
  auto const n = tt.num_vars();

  outcome o;
  o.input = g.input();
  o.input["constants"] = constants;
  o.input["budget"] = budget ? json( *budget ) : json();
  auto& r = o.result;
  r["gate"] = encode_hex( tt );
  r["constants"] = constants;
  r["count"] = report.count;
  r["output_count"] = report.output_count;
  r["rounds"] = report.rounds;
  r["complete"] = report.complete;
  r["tuples"] = report.tuples_evaluated;
  r["realized"] = hex_list( members, n );

  o.text = fmt::format( "gate: {} (arity {}, constants {})\n", encode_hex( tt ), n, constants ? "on" : "off" );
  o.text += fmt::format( "realized: {}\ngate outputs: {}\nrounds: {}\n", report.count, report.output_count, report.rounds );
  if ( !report.complete )
    o.text += fmt::format( "budget exhausted after {} tuples; counts are lower bounds\n", report.tuples_evaluated );
  o.text += fmt::format( "functions: {}\n", join_hex( members, n ) );
  return o;
}

outcome do_synth( gate_options const& g, std::string const& target_text, bool constants, bool dot )
{
  auto const tt = g.parse( g.gate );
  auto const target = g.parse( target_text );
  if ( target.num_vars() != tt.num_vars() )
  {
    throw usage_error( "gate and target differ in arity" );
  }
  auto const c = synthesize( tt, target, constants );

  outcome o;
  o.input = g.input();
  o.input["target"] = target_text;
  o.input["constants"] = constants;
  auto& r = o.result;
  r["gate"] = encode_hex( tt );
  r["target"] = encode_hex( target );
  r["realizable"] = c.has_value();
  if ( !c )
  {
    o.text = fmt::format( "{} cannot be realized from {}{}\n", encode_hex( target ), encode_hex( tt ), constants ? " with constants" : "" );
    return o;
  }
  r["size"] = c->size();
  r["circuit"] = to_json( *c );
  o.text = dot ? to_dot( *c ) : fmt::format( "size: {}\n{}\n", c->size(), to_json( *c ).dump() );
  return o;
}

outcome do_mux( gate_options const& g, std::string const& select, bool dot )
{
  auto const tt = g.parse( g.gate );
  std::vector<uint32_t> vars;
  std::stringstream ss( select );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    try
    {
      vars.push_back( parse_variable( item ) );
    }
    catch ( std::invalid_argument const& e )
    {
      throw usage_error( e.what() );
    }
  }
  mux_circuit mux;
  try
  {
    mux = mux_decompose( tt, vars );
  }
  catch ( std::invalid_argument const& e )
  {
    throw usage_error( e.what() );
  }

  outcome o;
  o.input = g.input();
  o.input["select"] = select;
  auto& r = o.result;
  r["gate"] = encode_hex( tt );
  r["mux"] = to_json( mux );
  r["permuted"] = encode_hex( mux.permuted );
  std::optional<fast_track_result> leaf_check;
  if ( mux.leaves.front().num_vars() == 2u )
    leaf_check = universality_from_leaves( mux );
  r["leaf_fast_track"] = leaf_check ? json( to_string( *leaf_check ) ) : json();

  if ( dot )
  {
    o.text = to_dot( mux );
    return o;
  }
  std::string names, leaves;
  for ( auto v : mux.select_vars )
    names += ( names.empty() ? "" : "," ) + variable_name( v );
  for ( auto const& leaf : mux.leaves )
    leaves += ( leaves.empty() ? "" : "," ) + encode_hex( leaf );
  o.text = fmt::format( "select: {}\nleaves: {}\npermuted: {}\n", names, leaves, encode_hex( mux.permuted ) );
  if ( leaf_check )
    o.text += fmt::format( "leaf fast track: {}\n", to_string( *leaf_check ) );
  return o;
}

outcome do_census( uint32_t arity, std::string const& format_name, std::string const& out_path,
                   std::vector<std::string> const& references, uint32_t threads, bool as_json )
{
  report_format format{};
  if ( format_name == "csv" )
    format = report_format::csv;
  else if ( format_name == "json" )
    format = report_format::json;
  else
    throw usage_error( fmt::format( "unknown format \"{}\"", format_name ) );
  if ( arity < 2u || arity > 4u )
    throw usage_error( fmt::format( "census arity {} outside 2..4", arity ) );

  auto const table = enumerate_all( arity, threads );

  outcome o;
  o.input["arity"] = arity;
  o.input["format"] = format_name;
  o.input["out"] = out_path.empty() ? json() : json( out_path );
  o.input["reference"] = references;
  auto& r = o.result;
  r["arity"] = arity;
  r["rows"] = table.rows.size();

  if ( out_path.empty() )
  {
    std::ostringstream os;
    write_report( table, format, os );
    if ( as_json )
      r["report"] = format == report_format::json ? json::parse( os.str() ) : json( os.str() );
    else
      o.text = os.str();
  }
  else
  {
    emit_report( table, format, out_path );
    r["out"] = out_path;
    o.text = fmt::format( "wrote {} rows to {}\n", table.rows.size(), out_path );
  }

  auto diffs = json::array();
  for ( auto const& ref : references )
  {
    auto const found = diff_against_reference( table, std::filesystem::path( ref ) );
    json d;
    d["file"] = ref;
    auto items = json::array();
    o.text += fmt::format( "diff {}: {} divergence(s)\n", ref, found.size() );
    for ( auto const& x : found )
    {
      json item;
      item["code"] = x.code;
      item["field"] = x.field;
      item["reference"] = x.reference_value;
      item["computed"] = x.computed_value;
      items.push_back( std::move( item ) );
      o.text += fmt::format( "  {} {}: reference {} computed {}\n", x.code, x.field, x.reference_value, x.computed_value );
    }
    d["divergences"] = std::move( items );
    diffs.push_back( std::move( d ) );
  }
  r["references"] = std::move( diffs );
  return o;
}

outcome do_count( uint32_t n )
{
  if ( n < 2u || n > 16u )
    throw usage_error( fmt::format( "N = {} outside 2..16", n ) );
  auto const c = universal_count( n );
  auto const ratio = fmt::format( "{}/{}", boost::multiprecision::numerator( c.ratio ).str(),
                                  boost::multiprecision::denominator( c.ratio ).str() );
  outcome o;
  o.input["n"] = n;
  auto& r = o.result;
  r["N"] = n;
  r["I"] = c.inputs.str();
  r["G"] = c.gates.str();
  r["G_S"] = c.unconstrained.str();
  r["self_dual"] = c.self_dual.str();
  r["U"] = c.universal.str();
  r["R"] = ratio;
  r["R_decimal"] = to_fixed( c.ratio );
  o.text = fmt::format( "N={}\nI={}\nG={}\nG_S={}\nself_dual={}\nU={}\nR={} ({})\n", n, c.inputs.str(), c.gates.str(),
                        c.unconstrained.str(), c.self_dual.str(), c.universal.str(), ratio, to_fixed( c.ratio ) );
  return o;
}

void add_gate_options( CLI::App* sub, gate_options& g )
{
  sub->add_option( "--gate,-g", g.gate, "gate as hex truth table (A is the most significant input)" )->required();
  sub->add_option( "--arity,-n", g.arity, "number of inputs; inferred from the digit count when omitted" )->check( CLI::Range( 1, 6 ) );
}

} // namespace

int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Universal logic gate toolkit", "ulg" };
  app.require_subcommand( 1 );
  app.fallthrough();
  bool as_json = false;
  app.add_flag( "--json", as_json, "print a JSON envelope instead of text" );

  gate_options classify_gate, closure_gate, synth_gate, mux_gate;
  bool closure_constants = false, synth_constants = false, dot = false;
  std::optional<uint64_t> budget;
  std::string target, select, format = "csv", out_path;
  std::vector<std::string> references;
  uint32_t census_arity = 3u, threads = 0u, count_n = 3u;

  auto* classify_cmd = app.add_subcommand( "classify", "Post-class flags and universality verdicts" );
  add_gate_options( classify_cmd, classify_gate );

  auto* closure_cmd = app.add_subcommand( "closure", "every function a gate realizes" );
  add_gate_options( closure_cmd, closure_gate );
  closure_cmd->add_flag( "--constants,-c", closure_constants, "seed with the constants 0 and 1" );
  closure_cmd->add_option( "--budget", budget, "maximum argument tuples to evaluate (required at arity 4)" );

  auto* synth_cmd = app.add_subcommand( "synth", "witness circuit for a target function" );
  add_gate_options( synth_cmd, synth_gate );
  synth_cmd->add_option( "--target,-t", target, "target function as hex" )->required();
  synth_cmd->add_flag( "--constants,-c", synth_constants, "allow the constants 0 and 1" );
  synth_cmd->add_flag( "--dot", dot, "emit Graphviz instead of JSON" );

  auto* mux_cmd = app.add_subcommand( "mux", "multiplexer-equivalent circuit" );
  add_gate_options( mux_cmd, mux_gate );
  mux_cmd->add_option( "--select,-s", select, "comma separated select variables, e.g. A,B" )->required();
  mux_cmd->add_flag( "--dot", dot, "emit Graphviz" );

  auto* census_cmd = app.add_subcommand( "census", "classify every gate of an arity" );
  census_cmd->add_option( "--arity,-n", census_arity, "arity 2..4" );
  census_cmd->add_option( "--format,-f", format, "csv or json" );
  census_cmd->add_option( "--out,-o", out_path, "output file (stdout when omitted)" );
  census_cmd->add_option( "--reference,-r", references, "reference CSV to diff against" );
  census_cmd->add_option( "--threads", threads, "worker count (default: ULG_THREADS or all cores)" );

  auto* count_cmd = app.add_subcommand( "count", "universal gate count and ratio" );
  count_cmd->add_option( "--n,-n", count_n, "number of inputs, 2..16" );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( CLI::CallForHelp const& )
  {
    out << app.help();
    return 0;
  }
  catch ( CLI::ParseError const& e )
  {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try
  {
    outcome o;
    std::string command;
    if ( classify_cmd->parsed() )
    {
      command = "classify";
      o = do_classify( classify_gate );
    }
    else if ( closure_cmd->parsed() )
    {
      command = "closure";
      o = do_closure( closure_gate, closure_constants, budget );
    }
    else if ( synth_cmd->parsed() )
    {
      command = "synth";
      o = do_synth( synth_gate, target, synth_constants, dot );
    }
    else if ( mux_cmd->parsed() )
    {
      command = "mux";
      o = do_mux( mux_gate, select, dot );
    }
    else if ( census_cmd->parsed() )
    {
      command = "census";
      o = do_census( census_arity, format, out_path, references, threads, as_json );
    }
    else
    {
      command = "count";
      o = do_count( count_n );
    }

    if ( as_json )
    {
      json envelope;
      envelope["command"] = command;
      envelope["input"] = std::move( o.input );
      envelope["result"] = std::move( o.result );
      out << envelope.dump( 2 ) << '\n';
    }
    else
    {
      out << o.text;
    }
    return 0;
  }
  catch ( limit_error const& e )
  {
    err << "limit: " << e.what() << '\n';
    return 2;
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace ulg::cli
