/*!
  \file closure.hpp
  \brief Exhaustive closure of a single gate, with witness circuits

  The closure of a gate G is the least set S containing the projections
  (and the constants 0 and 1 when enabled) such that G(f_1, ..., f_N) is in
  S whenever every f_i is.  It is computed round by round; round k only
  evaluates argument tuples containing at least one function first found in
  round k-1, and stops early once every function of the arity is reached.

  Each function records derivations from the round that first produced it
  (fewest rounds, hence minimal depth).  A derivation picks, for every
  argument, one of the argument's own recorded variants; its size is the
  number of distinct functions computed by Apply nodes in the union of
  those cones plus one.  Up to four smallest variants with distinct cones
  are kept per function so a later function can pick the ones that share
  the most.  The primary witness is the smallest variant, ties broken by the
  lexicographically smallest argument codes, then variant choices.
*/

#pragma once

#include <ulg/truth_table.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace ulg
{

/*! \brief Raised when a computation would exceed a hard resource limit. */
class limit_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Expression DAG over one generator gate. */
struct circuit
{
  struct input
  {
    uint32_t var;
    friend bool operator==( input const&, input const& ) = default;
  };
  struct const0
  {
    friend bool operator==( const0 const&, const0 const& ) = default;
  };
  struct const1
  {
    friend bool operator==( const1 const&, const1 const& ) = default;
  };
  struct apply
  {
    std::vector<uint32_t> args;
    friend bool operator==( apply const&, apply const& ) = default;
  };
  using node = std::variant<input, const0, const1, apply>;

  truth_table generator;
  uint32_t arity{};
  std::vector<node> nodes;
  uint32_t root{};

  /*! \brief Number of Apply nodes. */
  uint32_t size() const;

  friend bool operator==( circuit const&, circuit const& ) = default;
};

/*! \brief Evaluates the circuit bottom-up with `generator` at every Apply node.

  Throws std::invalid_argument for malformed circuits (bad indices, wrong
  fan-in, cycles, inputs outside the arity).
*/
truth_table verify_circuit( circuit const& c, truth_table const& generator );

nlohmann::ordered_json to_json( circuit const& c );
circuit circuit_from_json( nlohmann::json const& j );

/*! \brief Graphviz rendering, one node per DAG node. */
std::string to_dot( circuit const& c );

/*! \brief Membership set over all codes of one arity. */
class code_set
{
public:
  code_set() = default;
  explicit code_set( uint64_t universe );

  uint64_t universe() const noexcept { return universe_; }
  bool contains( uint64_t code ) const noexcept { return ( words_[code >> 6u] >> ( code & 63u ) ) & 1u; }
  void insert( uint64_t code ) noexcept { words_[code >> 6u] |= uint64_t{ 1 } << ( code & 63u ); }
  void fill();
  uint64_t count() const noexcept;
  bool is_subset_of( code_set const& other ) const;

  /*! \brief Members in increasing order. */
  std::vector<uint64_t> members() const;

  friend bool operator==( code_set const&, code_set const& ) = default;

private:
  uint64_t universe_{};
  std::vector<uint64_t> words_;
};

struct closure_options
{
  bool constants{ false };
  /*! \brief Cap on argument tuples evaluated; mandatory for arity 4. */
  std::optional<uint64_t> budget;
};

struct closure_report
{
  truth_table generator;
  bool constants_enabled{};

  /*! \brief Least fixed point over the seed set. */
  code_set realized;
  /*! \brief popcount of `realized`. */
  uint64_t count{};

  /*! \brief Functions appearing at the output of at least one gate application.

    Equal to `realized` except for constant generators, whose only output
    is the constant itself.  This is the per-gate census count.
  */
  code_set outputs;
  uint64_t output_count{};

  /*! \brief Rounds that added at least one new function. */
  uint32_t rounds{};

  /*! \brief False when the budget ran out; sets are then lower bounds. */
  bool complete{ true };

  uint64_t tuples_evaluated{};

  bool is_full() const noexcept { return count == realized.universe(); }

  /*! \brief Minimal witness circuit for a realized code; throws std::out_of_range otherwise. */
  circuit witness( uint64_t code ) const;

  /*! \brief Apply-node count of the stored witness. */
  uint32_t witness_size( uint64_t code ) const;

  struct derivation
  {
    enum class kind : uint8_t
    {
      none,
      input,
      const0,
      const1,
      apply
    };
    struct variant
    {
      std::vector<uint64_t> args;  /* argument codes */
      std::vector<uint8_t> choice; /* variant used for each argument */
      std::vector<uint64_t> cone;  /* Apply-node codes, sorted, including this one */
    };

    kind what{ kind::none };
    uint32_t round{};
    uint32_t var{}; /* for inputs */
    std::vector<variant> variants; /* best first; empty for leaves */

    uint32_t size() const noexcept { return variants.empty() ? 0u : static_cast<uint32_t>( variants.front().cone.size() ); }
  };

  std::vector<derivation> derivations; /* indexed by code */
};

/*! \brief Computes the closure of `gate`.

  Arity 1 to 3 runs to completion unless a budget is given.  Arity 4 needs
  `options.budget` (throws limit_error otherwise) and reports lower bounds.
  Larger arities throw limit_error.
*/
closure_report generate_closure( truth_table const& gate, closure_options const& options = {} );

inline closure_report generate_closure( truth_table const& gate, bool constants_enabled )
{
  return generate_closure( gate, closure_options{ constants_enabled, std::nullopt } );
}

/*! \brief Witness circuit for `target`, or std::nullopt when the gate cannot realize it. */
std::optional<circuit> synthesize( truth_table const& gate, truth_table const& target, bool constants_enabled );

/*! \brief Applies `gate` to argument words of `gate.num_vars()` truth tables of the same arity. */
uint64_t apply_gate( truth_table const& gate, std::span<uint64_t const> args, uint64_t row_mask );

} // namespace ulg
