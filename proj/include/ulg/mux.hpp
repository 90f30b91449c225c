/*!
  \file mux.hpp
  \brief Multiplexer-equivalent circuits (iterated Shannon cofactors)

  A gate of arity N with k select variables becomes a 2^k:1 multiplexer
  whose data lines carry the cofactors of arity N-k.  Selecting on
  variables other than the leading ones is done by moving the select
  variables to the front first; the resulting encoding is kept in
  `permuted` (0x4685 selected on D reads 0x18A3).
*/

#pragma once

#include <ulg/classify.hpp>
#include <ulg/truth_table.hpp>

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ulg
{

struct mux_circuit
{
  uint32_t arity{};
  std::vector<uint32_t> select_vars;
  /*! \brief Leaf s is the cofactor under select assignment s, first select variable most significant. */
  std::vector<truth_table> leaves;
  /*! \brief The gate with the select variables moved to the leading positions. */
  truth_table permuted;
};

mux_circuit mux_decompose( truth_table const& tt, std::vector<uint32_t> const& select_vars );

/*! \brief Rebuilds the original gate (in its own variable order) from the leaves. */
truth_table recompose( mux_circuit const& mux );

/*! \brief Confirmed when some two-input leaf is one of {1, 2, 4, 7, B, D}. */
fast_track_result universality_from_leaves( mux_circuit const& mux );

/*! \brief {"select": [indices], "leaves": [hex, ...]} */
nlohmann::ordered_json to_json( mux_circuit const& mux );
mux_circuit mux_from_json( nlohmann::json const& j );

std::string to_dot( mux_circuit const& mux );

} // namespace ulg
