#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace raagmcg {

// Command-line front end. args excludes the program name; regular output
// goes to out, diagnostics to err. Returns the process exit code:
// 0 success, 1 usage error, 2 domain error, 3 verification failure.
// Identical args always produce byte-identical output.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace raagmcg
