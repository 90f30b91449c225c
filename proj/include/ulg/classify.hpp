/*!
  \file classify.hpp
  \brief Post-class membership tests and universality verdicts for single gates

  A gate G is universal on its own iff it escapes the zero-preserving,
  one-preserving and self-dual classes.  With the constants 0 and 1
  available, {G, 0, 1} is complete iff G is neither monotone nor affine.
*/

#pragma once

#include <ulg/truth_table.hpp>

#include <string_view>

namespace ulg
{

enum class verdict
{
  universal,
  non_universal
};

enum class fast_track_result
{
  confirmed_universal_with_constants,
  inconclusive
};

std::string_view to_string( verdict v );
std::string_view to_string( fast_track_result r );

struct classification
{
  truth_table gate;
  bool preserves_zero{};
  bool preserves_one{};
  bool self_dual{};
  bool monotone{};
  bool affine{};
  verdict alone{ verdict::non_universal };
  verdict with_constants{ verdict::non_universal };
};

/*! \brief f(0,...,0) = 0 */
bool preserves_zero( truth_table const& tt );

/*! \brief f(1,...,1) = 1 */
bool preserves_one( truth_table const& tt );

bool is_self_dual( truth_table const& tt );

/*! \brief x <= y (bitwise) implies f(x) <= f(y) */
bool is_monotone( truth_table const& tt );

/*! \brief Algebraic normal form (Moebius transform); bit r is the coefficient of the monomial whose variables are set in r. */
uint64_t algebraic_normal_form( truth_table const& tt );

/*! \brief The algebraic normal form has no monomial of degree two or more. */
bool is_affine( truth_table const& tt );

verdict classify_alone( truth_table const& tt );
verdict classify_with_constants( truth_table const& tt );

/*! \brief All flags and both verdicts. */
classification classify( truth_table const& tt );

/*! \brief Row-scan search for a universal gate.

  Requires TT[0] = 1 and TT[M-1] = 0, then looks for an index i in 1..M/2
  with TT[i] = TT[M-1-i], which witnesses that the gate is not self-dual.
*/
verdict algorithm1_scan( truth_table const& tt );

/*! \brief Sufficient test for universality with constants read off the hex encoding.

  For arity 3 a hex digit is a cofactor on A and B; the gate is confirmed
  when some digit is one of the six two-input gates {1, 2, 4, 7, B, D}
  that are universal with constants.  For larger arities the two halves
  of the encoding are the cofactors on A, and the gate is confirmed when
  either half is universal with constants at the smaller arity.  Any
  cofactor is reachable by tying an input to a constant, so a confirmed
  gate is always universal with constants.

  Throws std::invalid_argument for arity below 3.
*/
fast_track_result hex_fast_track( truth_table const& tt );

} // namespace ulg
