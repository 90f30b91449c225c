/*!
  \file census.hpp
  \brief Whole-arity gate census, universal-gate counting and reference diffs
*/

#pragma once

#include <ulg/classify.hpp>
#include <ulg/truth_table.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ulg
{

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

struct census_row
{
  classification cls;
  /* closure counts exist only for arity <= 3 */
  std::optional<uint64_t> closure_plain;
  std::optional<uint64_t> closure_const;
  /* fast track exists only for arity >= 3 */
  std::optional<fast_track_result> fast_track;

  truth_table const& gate() const noexcept { return cls.gate; }
};

struct census_table
{
  uint32_t arity{};
  std::vector<census_row> rows; /* in code order */
};

/*! \brief Census of every gate of the arity (2..4); closures are computed up to arity 3.

  Rows are computed by `threads` workers (0 picks ULG_THREADS or the
  hardware concurrency); the result does not depend on the worker count.
*/
census_table enumerate_all( uint32_t arity, uint32_t threads = 0u );

/*! \brief Worker count from ULG_THREADS, falling back to the hardware concurrency. */
uint32_t default_thread_count();

struct count_report
{
  uint32_t n{};
  big_int inputs;           /* I_N = 2^N */
  big_int gates;            /* G_N = 2^I_N */
  big_int unconstrained;    /* G_S = G_N / 4, neither 0- nor 1-preserving */
  big_int self_dual;        /* sqrt(G_N / 4), self-dual among those */
  big_int universal;        /* U_N = G_N / 4 - sqrt(G_N / 4) */
  big_rational ratio;       /* R_N = U_N / G_N */
};

/*! \brief Exact universal-gate count for 2 <= N <= 16. */
count_report universal_count( uint32_t n );

big_rational universal_ratio( uint32_t n );

/*! \brief Decimal rendering rounded half-up to `digits` places. */
std::string to_fixed( big_rational const& value, uint32_t digits = 6u );

enum class report_format
{
  csv,
  json
};

inline constexpr char const* census_csv_header =
    "code,t0,t1,selfdual,monotone,affine,universal_alone,universal_with_constants,closure_plain,closure_const,fast_track";

void write_report( census_table const& table, report_format format, std::ostream& os );

/*! \brief Writes the report to `destination`; I/O failures name the path. */
void emit_report( census_table const& table, report_format format, std::filesystem::path const& destination );

/*! \brief Value of a named field for one row, as it appears in reports.

  Besides the CSV columns, `added_by_constants` is 1 for gates that are
  universal with constants but not alone.  Absent values render as "".
*/
std::string field_value( census_row const& row, std::string const& field );

struct divergence
{
  std::string code;
  std::string field;
  std::string reference_value;
  std::string computed_value;

  friend bool operator==( divergence const&, divergence const& ) = default;
};

/*! \brief Compares a census with reference data.

  The reference is CSV keyed by hex code: a header `code,<field>,...`
  followed by one row per gate.  Lines starting with `#` are comments,
  except `#default <field>=<value>`, which states the expected value for
  every code of the arity that the file does not list.
*/
std::vector<divergence> diff_against_reference( census_table const& table, std::istream& reference );
std::vector<divergence> diff_against_reference( census_table const& table, std::filesystem::path const& reference );

} // namespace ulg
