#ifndef VINEBOUND_CLI_HPP
#define VINEBOUND_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace vinebound::cli {

enum ExitCode : int {
    kOk = 0,
    kViolation = 1,     // a theorem check failed: counterexample candidate
    kInputError = 2,
    kResourceLimit = 3,
};

// Runs one command line (without the program name).
//   analyze FILE [--json PATH] [--verbose] [--all-vines] [--vine-cap N] [--exhaustive]
//   extremal --m M --slack Y [--out FILE] [--verify] [--json PATH]
//   fuzz --count N --nmin A --nmax B --seed S [--jobs J] [--json PATH] [--timing]
//   oracle-check --count N --nmax B --seed S [--nmin A] [--graph FILE] [--json PATH]
// A --json PATH of "-" writes the document to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vinebound::cli

#endif // VINEBOUND_CLI_HPP
