#ifndef FFCOND_TOOLS_CLI_HPP
#define FFCOND_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "ffcond/numbers.hpp"

namespace ffcond::cli {

/* decimal annotation of an exact rational: exact when the expansion
   terminates within `digits` fractional places, truncated toward zero
   otherwise; the exact "num/den" form always travels next to it */
std::string decimal_string(const BigRat& x, unsigned digits = 12);

/* command-line front end; args excludes the program name.
   exit codes: 0 ok, 1 usage or domain error, 2 I/O error,
   3 verification failure */
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace ffcond::cli

#endif
