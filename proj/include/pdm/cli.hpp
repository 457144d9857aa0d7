#ifndef PDM_CLI_HPP
#define PDM_CLI_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace pdm {

// Flat key=value run configuration ('#' comments, blank lines allowed).
// Keys mirror the long flag names without the leading dashes. Unknown keys
// and malformed lines throw std::domain_error naming the offending token.
std::map<std::string, std::string> parse_config_file(std::istream& in);

// Complete command-line front end; returns the process exit code
// (0 ok, 1 usage, 2 numerical failure budget exceeded, 3 validation failure).
// CSV/report output goes to `out` unless --out names a file; diagnostics go
// to `err`. Flag values override config-file values override defaults.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace pdm

#endif
