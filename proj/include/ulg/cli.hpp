/*!
  \file cli.hpp
  \brief Command-line front end

  Subcommands: classify, closure, synth, mux, census, count.  Exit status is
  0 on success, 1 on usage errors and 2 when a request exceeds an internal
  limit (for example an arity-4 closure without --budget).
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ulg::cli
{

/*! \brief Runs one invocation; `args` excludes the program name. */
int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err );

} // namespace ulg::cli
