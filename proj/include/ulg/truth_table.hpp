/*!
  \file truth_table.hpp
  \brief Packed truth tables for Boolean functions of up to six variables

  Row `r` of a table holds f(assignment r), where variable k (A = 0) takes
  the bit of `r` at position N-1-k.  Variable A is therefore the most
  significant bit of the row index, and row r is bit r of the integer code.
  With this convention NOR is "1", NAND is "7" and 3-input majority is "E8".
*/

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ulg
{

inline constexpr uint32_t max_arity = 6u;

/*! \brief Boolean function of `num_vars()` inputs stored in one 64-bit word. */
class truth_table
{
public:
  /*! \brief Constant-0 function of arity 1. */
  truth_table() = default;

  /*! \brief Table with the given code; throws if arity or code are out of range. */
  truth_table( uint32_t arity, uint64_t code );

  uint32_t num_vars() const noexcept { return arity_; }
  uint32_t num_bits() const noexcept { return 1u << arity_; }
  uint64_t code() const noexcept { return code_; }

  /*! \brief Mask with the low `num_bits()` bits set. */
  uint64_t mask() const noexcept { return row_mask( arity_ ); }

  bool get_bit( uint32_t row ) const noexcept { return ( code_ >> row ) & 1u; }

  static uint64_t row_mask( uint32_t arity ) noexcept
  {
    return arity >= 6u ? ~uint64_t{ 0 } : ( uint64_t{ 1 } << ( 1u << arity ) ) - 1u;
  }

  friend bool operator==( truth_table const&, truth_table const& ) = default;
  friend auto operator<=>( truth_table const&, truth_table const& ) = default;

private:
  uint32_t arity_{ 1u };
  uint64_t code_{ 0u };
};

/*! \brief Relabelling of input variables.

  `mapping[k]` is the new index of old variable k.
*/
class variable_permutation
{
public:
  explicit variable_permutation( std::vector<uint32_t> mapping );

  static variable_permutation identity( uint32_t n );

  /*! \brief Moves `front` to the leading positions (in order); the others keep their relative order. */
  static variable_permutation to_front( uint32_t n, std::span<uint32_t const> front );

  uint32_t size() const noexcept { return static_cast<uint32_t>( mapping_.size() ); }
  uint32_t operator[]( uint32_t var ) const { return mapping_.at( var ); }
  std::vector<uint32_t> const& mapping() const noexcept { return mapping_; }

  variable_permutation inverse() const;

  /*! \brief Permutation equal to applying `*this` first and `then` second. */
  variable_permutation followed_by( variable_permutation const& then ) const;

  friend bool operator==( variable_permutation const&, variable_permutation const& ) = default;

private:
  std::vector<uint32_t> mapping_;
};

/*! \brief Number of hex digits used for a table of the given arity. */
uint32_t hex_digits( uint32_t arity );

/*! \brief Parses a fully padded, case-insensitive hex string. */
truth_table decode_hex( std::string_view text, uint32_t arity );

/*! \brief Infers the arity from the digit count (1 digit is taken as arity 2). */
truth_table decode_hex( std::string_view text );

/*! \brief Uppercase, zero-padded hex rendering. */
std::string encode_hex( truth_table const& tt );

truth_table constant( uint32_t arity, bool value );

/*! \brief The function returning variable `var`. */
truth_table projection( uint32_t arity, uint32_t var );

/*! \brief Row index of an assignment, first entry is variable A. */
uint32_t row_index( std::span<uint8_t const> assignment );

bool evaluate( truth_table const& tt, std::span<uint8_t const> assignment );

/*! \brief Pointwise composition: result(x) = gate(args[0](x), ..., args[N-1](x)). */
truth_table compose( truth_table const& gate, std::span<truth_table const> args );

/*! \brief Restriction of `tt` with `var` fixed to `value`; arity drops by one. */
truth_table cofactor( truth_table const& tt, uint32_t var, bool value );

/*! \brief f*(x) = not f(not x). */
truth_table dual( truth_table const& tt );

truth_table permute_variables( truth_table const& tt, variable_permutation const& perm );

/*! \brief Letter name of a variable: 0 -> "A", 1 -> "B", ... */
std::string variable_name( uint32_t var );

/*! \brief Inverse of variable_name, also accepts decimal indices. */
uint32_t parse_variable( std::string_view name );

} // namespace ulg
