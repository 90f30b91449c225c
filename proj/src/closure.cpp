#include <ulg/closure.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <tuple>
#include <sstream>

#include <fmt/format.h>

namespace ulg
{

/* code_set */

code_set::code_set( uint64_t universe )
    : universe_( universe ), words_( std::max<uint64_t>( 1u, ( universe + 63u ) / 64u ), 0u )
{
}

void code_set::fill()
{
  std::fill( words_.begin(), words_.end(), ~uint64_t{ 0 } );
  if ( auto const tail = universe_ & 63u; tail != 0u )
    words_.back() = ( uint64_t{ 1 } << tail ) - 1u;
}

uint64_t code_set::count() const noexcept
{
  uint64_t n = 0u;
  for ( auto w : words_ )
    n += static_cast<uint64_t>( std::popcount( w ) );
  return n;
}

bool code_set::is_subset_of( code_set const& other ) const
{
  if ( other.universe_ != universe_ )
    return false;
  for ( auto i = 0u; i < words_.size(); ++i )
  {
    if ( ( words_[i] & ~other.words_[i] ) != 0u )
      return false;
  }
  return true;
}

std::vector<uint64_t> code_set::members() const
{
  std::vector<uint64_t> out;
  for ( auto i = 0u; i < words_.size(); ++i )
  {
    auto w = words_[i];
    while ( w != 0u )
    {
      out.push_back( uint64_t{ i } * 64u + static_cast<uint64_t>( std::countr_zero( w ) ) );
      w &= w - 1u;
    }
  }
  return out;
}

/* circuits */

uint32_t circuit::size() const
{
  return static_cast<uint32_t>( std::count_if( nodes.begin(), nodes.end(), []( auto const& n ) { return std::holds_alternative<apply>( n ); } ) );
}

uint64_t apply_gate( truth_table const& gate, std::span<uint64_t const> args, uint64_t row_mask )
{
  auto const n = gate.num_vars();
  if ( args.size() != n )
  {
    throw std::invalid_argument( fmt::format( "gate of arity {} applied to {} arguments", n, args.size() ) );
  }
  /* Shannon cascade: level j holds the residual functions of the remaining inputs */
  std::array<uint64_t, 64> level{};
  auto width = 1u << n;
  for ( auto s = 0u; s < width; ++s )
    level[s] = gate.get_bit( s ) ? row_mask : 0u;
  for ( auto a : args )
  {
    width >>= 1u;
    for ( auto s = 0u; s < width; ++s )
      level[s] = ( ~a & level[s] ) | ( a & level[s + width] );
  }
  return level[0] & row_mask;
}

truth_table verify_circuit( circuit const& c, truth_table const& generator )
{
  if ( c.arity < 1u || c.arity > max_arity )
  {
    throw std::invalid_argument( fmt::format( "circuit arity {} out of range", c.arity ) );
  }
  if ( c.root >= c.nodes.size() )
  {
    throw std::invalid_argument( "circuit root out of range" );
  }
  auto const mask = truth_table::row_mask( c.arity );

  enum class mark : uint8_t
  {
    fresh,
    active,
    done
  };
  std::vector<mark> state( c.nodes.size(), mark::fresh );
  std::vector<uint64_t> value( c.nodes.size(), 0u );

  /* iterative post-order so deep circuits do not exhaust the stack */
  std::vector<std::pair<uint32_t, bool>> stack{ { c.root, false } };
  while ( !stack.empty() )
  {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if ( state[id] == mark::done )
      continue;
    auto const& node = c.nodes[id];

    if ( expanded )
    {
      if ( auto const* in = std::get_if<circuit::input>( &node ) )
      {
        value[id] = projection( c.arity, in->var ).code();
      }
      else if ( std::holds_alternative<circuit::const0>( node ) )
      {
        value[id] = 0u;
      }
      else if ( std::holds_alternative<circuit::const1>( node ) )
      {
        value[id] = mask;
      }
      else
      {
        auto const& ap = std::get<circuit::apply>( node );
        std::vector<uint64_t> args;
        args.reserve( ap.args.size() );
        for ( auto child : ap.args )
          args.push_back( value[child] );
        value[id] = apply_gate( generator, args, mask );
      }
      state[id] = mark::done;
      continue;
    }

    if ( state[id] == mark::active )
    {
      throw std::invalid_argument( fmt::format( "circuit has a cycle through node {}", id ) );
    }
    state[id] = mark::active;
    stack.emplace_back( id, true );

    if ( auto const* in = std::get_if<circuit::input>( &node ) )
    {
      if ( in->var >= c.arity )
        throw std::invalid_argument( fmt::format( "input variable {} outside arity {}", in->var, c.arity ) );
    }
    else if ( auto const* ap = std::get_if<circuit::apply>( &node ) )
    {
      if ( ap->args.size() != generator.num_vars() )
      {
        throw std::invalid_argument( fmt::format( "node {} has {} children, generator needs {}", id, ap->args.size(), generator.num_vars() ) );
      }
      for ( auto child : ap->args )
      {
        if ( child >= c.nodes.size() )
          throw std::invalid_argument( fmt::format( "node {} refers to missing node {}", id, child ) );
        if ( state[child] == mark::active )
          throw std::invalid_argument( fmt::format( "circuit has a cycle through node {}", child ) );
        if ( state[child] == mark::fresh )
          stack.emplace_back( child, false );
      }
    }
  }
  return truth_table( c.arity, value[c.root] );
}

nlohmann::ordered_json to_json( circuit const& c )
{
  nlohmann::ordered_json j;
  j["generator"] = encode_hex( c.generator );
  j["arity"] = c.arity;
  auto nodes = nlohmann::ordered_json::array();
  for ( auto const& node : c.nodes )
  {
    nlohmann::ordered_json n;
    std::visit(
        [&]( auto const& v ) {
          using T = std::decay_t<decltype( v )>;
          if constexpr ( std::is_same_v<T, circuit::input> )
          {
            n["op"] = "input";
            n["var"] = v.var;
          }
          else if constexpr ( std::is_same_v<T, circuit::const0> )
          {
            n["op"] = "const0";
          }
          else if constexpr ( std::is_same_v<T, circuit::const1> )
          {
            n["op"] = "const1";
          }
          else
          {
            n["op"] = "apply";
            n["args"] = v.args;
          }
        },
        node );
    nodes.push_back( std::move( n ) );
  }
  j["nodes"] = std::move( nodes );
  j["root"] = c.root;
  return j;
}

circuit circuit_from_json( nlohmann::json const& j )
{
  try
  {
    circuit c;
    c.arity = j.at( "arity" ).get<uint32_t>();
    c.generator = decode_hex( j.at( "generator" ).get<std::string>() );
    for ( auto const& n : j.at( "nodes" ) )
    {
      auto const op = n.at( "op" ).get<std::string>();
      if ( op == "input" )
        c.nodes.emplace_back( circuit::input{ n.at( "var" ).get<uint32_t>() } );
      else if ( op == "const0" )
        c.nodes.emplace_back( circuit::const0{} );
      else if ( op == "const1" )
        c.nodes.emplace_back( circuit::const1{} );
      else if ( op == "apply" )
        c.nodes.emplace_back( circuit::apply{ n.at( "args" ).get<std::vector<uint32_t>>() } );
      else
        throw std::invalid_argument( fmt::format( "unknown node op \"{}\"", op ) );
    }
    c.root = j.at( "root" ).get<uint32_t>();
    return c;
  }
  catch ( nlohmann::json::exception const& e )
  {
    throw std::invalid_argument( fmt::format( "malformed circuit JSON: {}", e.what() ) );
  }
}

std::string to_dot( circuit const& c )
{
  std::ostringstream os;
  os << "digraph circuit {\n  rankdir=BT;\n";
  for ( auto i = 0u; i < c.nodes.size(); ++i )
  {
    std::visit(
        [&]( auto const& v ) {
          using T = std::decay_t<decltype( v )>;
          if constexpr ( std::is_same_v<T, circuit::input> )
            os << fmt::format( "  n{} [shape=plaintext,label=\"{}\"];\n", i, variable_name( v.var ) );
          else if constexpr ( std::is_same_v<T, circuit::const0> )
            os << fmt::format( "  n{} [shape=plaintext,label=\"0\"];\n", i );
          else if constexpr ( std::is_same_v<T, circuit::const1> )
            os << fmt::format( "  n{} [shape=plaintext,label=\"1\"];\n", i );
          else
          {
            os << fmt::format( "  n{} [shape=box,label=\"{}\"];\n", i, encode_hex( c.generator ) );
            for ( auto child : v.args )
              os << fmt::format( "  n{} -> n{};\n", child, i );
          }
        },
        c.nodes[i] );
  }
  os << fmt::format( "  out [shape=plaintext,label=\"f\"];\n  n{} -> out;\n}}\n", c.root );
  return os.str();
}

/* closure engine */

namespace
{

class closure_engine
{
public:
  closure_engine( truth_table const& gate, closure_options const& options )
      : gate_( gate ),
        n_( gate.num_vars() ),
        mask_( gate.mask() ),
        universe_( uint64_t{ 1 } << gate.num_bits() ),
        budget_( options.budget ),
        max_variants_( gate.num_vars() <= 3u ? 4u : 1u )
  {
    report_.generator = gate;
    report_.constants_enabled = options.constants;
    report_.realized = code_set( universe_ );
    report_.outputs = code_set( universe_ );
    report_.derivations.resize( universe_ );
    stamp_.assign( universe_, 0u );

    for ( auto k = 0u; k < n_; ++k )
      seed( projection( n_, k ).code(), derivation::kind::input, k );
    if ( options.constants )
    {
      seed( 0u, derivation::kind::const0, 0u );
      seed( mask_, derivation::kind::const1, 0u );
    }
  }

  closure_report run()
  {
    std::size_t old_end = 0u;
    while ( true )
    {
      auto const frontier_end = members_.size();
      if ( frontier_end == old_end )
        break; /* quiescent */

      ++round_;
      bool const aborted = !run_round( old_end, frontier_end );
      if ( members_.size() > frontier_end )
        report_.rounds = round_;

      if ( aborted )
      {
        report_.complete = false;
        break;
      }
      if ( members_.size() == universe_ )
      {
        /* every function of the arity is realized; any non-constant gate maps the full space onto itself */
        report_.outputs.fill();
        break;
      }
      old_end = frontier_end;
    }

    report_.count = report_.realized.count();
    report_.output_count = report_.outputs.count();
    return std::move( report_ );
  }

private:
  using derivation = closure_report::derivation;
  using variant = derivation::variant;

  void seed( uint64_t code, derivation::kind what, uint32_t var )
  {
    if ( report_.realized.contains( code ) )
      return;
    report_.realized.insert( code );
    members_.push_back( code );
    auto& d = report_.derivations[code];
    d.what = what;
    d.round = 0u;
    d.var = var;
  }

  /* returns false when the budget ran out */
  bool run_round( std::size_t old_end, std::size_t frontier_end )
  {
    old_end_ = old_end;
    frontier_end_ = frontier_end;
    tuple_.assign( n_, 0u );
    for ( auto first_new = 0u; first_new < n_; ++first_new )
    {
      first_new_ = first_new;
      levels_[0][0] = 0u;
      auto width = 1u << n_;
      for ( auto s = 0u; s < width; ++s )
        levels_[0][s] = gate_.get_bit( s ) ? mask_ : 0u;
      if ( !descend( 0u ) )
        return false;
    }
    return true;
  }

  std::pair<std::size_t, std::size_t> range_for( uint32_t position ) const
  {
    if ( position < first_new_ )
      return { 0u, old_end_ };
    if ( position == first_new_ )
      return { old_end_, frontier_end_ };
    return { 0u, frontier_end_ };
  }

  bool descend( uint32_t position )
  {
    auto const [begin, end] = range_for( position );
    auto const width = 1u << ( n_ - 1u - position );
    auto const& in = levels_[position];

    if ( position + 1u == n_ )
    {
      auto const lo = in[0];
      auto const hi = in[1];
      for ( auto i = begin; i < end; ++i )
      {
        auto const a = members_[i];
        tuple_[position] = a;
        record( ( ~a & lo ) | ( a & hi ) );
        if ( budget_ && report_.tuples_evaluated >= *budget_ )
          return false;
      }
      return true;
    }

    auto& out = levels_[position + 1u];
    for ( auto i = begin; i < end; ++i )
    {
      auto const a = members_[i];
      tuple_[position] = a;
      for ( auto s = 0u; s < width; ++s )
        out[s] = ( ~a & in[s] ) | ( a & in[s + width] );
      if ( !descend( position + 1u ) )
        return false;
    }
    return true;
  }

  void record( uint64_t result )
  {
    result &= mask_;
    ++report_.tuples_evaluated;
    report_.outputs.insert( result );

    auto& d = report_.derivations[result];
    bool const known = report_.realized.contains( result );
    if ( known && d.round < round_ )
      return;

    uint32_t lower = 0u;
    for ( auto a : tuple_ )
      lower = std::max( lower, report_.derivations[a].size() );
    if ( known && lower + 1u > d.size() )
      return;

    auto found = best_variant( known ? d.size() : std::numeric_limits<uint32_t>::max() );
    if ( !found )
      return;
    auto& v = *found;
    v.cone.push_back( result );
    std::sort( v.cone.begin(), v.cone.end() );

    if ( !known )
    {
      report_.realized.insert( result );
      members_.push_back( result );
      d.what = derivation::kind::apply;
      d.round = round_;
      d.variants.push_back( std::move( v ) );
      return;
    }
    merge( d, std::move( v ) );
  }

  /* cheapest choice of argument variants for the current tuple, if one fits in `limit` */
  std::optional<variant> best_variant( uint32_t limit )
  {
    auto const& derivs = report_.derivations;
    choice_.assign( n_, 0u );
    std::vector<uint8_t> best_choice;
    uint32_t best = limit;

    while ( true )
    {
      ++stamp_id_;
      uint32_t count = 1u;
      for ( auto i = 0u; i < n_ && count <= best; ++i )
      {
        auto const& da = derivs[tuple_[i]];
        if ( da.variants.empty() )
          continue;
        for ( auto c : da.variants[choice_[i]].cone )
        {
          if ( stamp_[c] != stamp_id_ )
          {
            stamp_[c] = stamp_id_;
            ++count;
          }
        }
      }
      if ( count < best || ( count == best && best_choice.empty() ) )
      {
        best = count;
        best_choice = choice_;
      }

      if ( !next_choice() )
        break;
    }

    if ( best_choice.empty() )
      return std::nullopt;
    variant v;
    v.args = tuple_;
    v.choice = best_choice;
    ++stamp_id_;
    for ( auto k = 0u; k < n_; ++k )
    {
      auto const& da = derivs[tuple_[k]];
      if ( da.variants.empty() )
        continue;
      for ( auto c : da.variants[best_choice[k]].cone )
      {
        if ( stamp_[c] != stamp_id_ )
        {
          stamp_[c] = stamp_id_;
          v.cone.push_back( c );
        }
      }
    }
    return v;
  }

  /* odometer over the argument variants */
  bool next_choice()
  {
    for ( auto i = n_; i-- > 0u; )
    {
      auto const options = std::max<std::size_t>( 1u, report_.derivations[tuple_[i]].variants.size() );
      if ( ++choice_[i] < options )
        return true;
      choice_[i] = 0u;
    }
    return false;
  }

  void merge( derivation& d, variant v )
  {
    auto const key = []( variant const& x ) { return std::tie( x.args, x.choice ); };
    if ( v.cone.size() < d.size() )
    {
      d.variants.clear();
      d.variants.push_back( std::move( v ) );
      return;
    }
    if ( v.cone.size() > d.size() )
      return;
    for ( auto& e : d.variants )
    {
      if ( e.cone == v.cone )
      {
        if ( key( v ) < key( e ) )
        {
          e = std::move( v );
          std::sort( d.variants.begin(), d.variants.end(), [&]( auto const& x, auto const& y ) { return key( x ) < key( y ); } );
        }
        return;
      }
    }
    auto pos = std::find_if( d.variants.begin(), d.variants.end(), [&]( auto const& e ) { return key( v ) < key( e ); } );
    if ( pos == d.variants.end() && d.variants.size() >= max_variants_ )
      return;
    d.variants.insert( pos, std::move( v ) );
    if ( d.variants.size() > max_variants_ )
      d.variants.pop_back();
  }

  truth_table gate_;
  uint32_t n_;
  uint64_t mask_;
  uint64_t universe_;
  std::optional<uint64_t> budget_;

  closure_report report_;
  std::vector<uint64_t> members_; /* discovery order */
  uint32_t round_{};

  std::size_t old_end_{};
  std::size_t frontier_end_{};
  uint32_t first_new_{};
  std::vector<uint64_t> tuple_;
  std::array<std::array<uint64_t, 64>, 7> levels_{};

  std::vector<uint32_t> stamp_;
  uint32_t stamp_id_{};
  std::vector<uint8_t> choice_;
  std::size_t max_variants_;
};

} // namespace

closure_report generate_closure( truth_table const& gate, closure_options const& options )
{
  auto const n = gate.num_vars();
  if ( n > 4u )
  {
    throw limit_error( fmt::format( "closure of arity {} is infeasible (at most 4)", n ) );
  }
  if ( n == 4u && !options.budget )
  {
    throw limit_error( "closure at arity 4 needs an explicit tuple budget" );
  }
  return closure_engine( gate, options ).run();
}

uint32_t closure_report::witness_size( uint64_t code ) const
{
  return witness( code ).size();
}

circuit closure_report::witness( uint64_t code ) const
{
  if ( code >= derivations.size() || !realized.contains( code ) )
  {
    throw std::out_of_range( fmt::format( "code {:#x} is not realized", code ) );
  }

  circuit c;
  c.generator = generator;
  c.arity = generator.num_vars();

  /* depth-first; the first variant reaching a code wins, so every function is computed once */
  std::vector<int64_t> node_of( derivations.size(), -1 );
  auto emit = [&]( auto&& self, uint64_t current, uint8_t which ) -> void {
    if ( node_of[current] >= 0 )
      return;
    auto const& d = derivations[current];
    switch ( d.what )
    {
    case derivation::kind::input:
      c.nodes.emplace_back( circuit::input{ d.var } );
      break;
    case derivation::kind::const0:
      c.nodes.emplace_back( circuit::const0{} );
      break;
    case derivation::kind::const1:
      c.nodes.emplace_back( circuit::const1{} );
      break;
    case derivation::kind::apply:
    {
      auto const& v = d.variants[which];
      circuit::apply ap;
      for ( auto i = 0u; i < v.args.size(); ++i )
      {
        self( self, v.args[i], v.choice[i] );
        ap.args.push_back( static_cast<uint32_t>( node_of[v.args[i]] ) );
      }
      c.nodes.emplace_back( std::move( ap ) );
      break;
    }
    case derivation::kind::none:
      throw std::logic_error( "realized code without derivation" );
    }
    node_of[current] = static_cast<int64_t>( c.nodes.size() - 1u );
  };
  emit( emit, code, 0u );
  c.root = static_cast<uint32_t>( node_of[code] );
  return c;
}

std::optional<circuit> synthesize( truth_table const& gate, truth_table const& target, bool constants_enabled )
{
  if ( gate.num_vars() != target.num_vars() )
  {
    throw std::invalid_argument( fmt::format( "gate arity {} differs from target arity {}", gate.num_vars(), target.num_vars() ) );
  }
  if ( gate.num_vars() > 3u )
  {
    throw limit_error( "synthesis is limited to arity 3" );
  }
  auto const report = generate_closure( gate, constants_enabled );
  if ( !report.realized.contains( target.code() ) )
    return std::nullopt;
  return report.witness( target.code() );
}

} // namespace ulg
