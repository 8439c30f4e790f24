#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maksarum::cli {

// Exit statuses: 0 when everything requested verified, 1 on a failed check
// or a runtime error, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Significant digits for decimal output: MAKSARUM_PRECISION when it holds a
// number (clamped to 15..100), otherwise 30.
int decimal_precision();

}  // namespace maksarum::cli
