#pragma once

// Command-line front end: subcommand dispatch with machine-readable
// output. Exit codes: 0 success, 1 domain error, 2 parse/usage error.

#include <ostream>
#include <string>
#include <vector>

namespace dcoset::cli {

// args = argv without the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The verify subcommand's check runner; returns the number of failures.
// scope is one of "paper-tables", "properties", "all".
struct CheckResult {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass;
};
std::vector<CheckResult> run_verify_checks(const std::string& scope);

}  // namespace dcoset::cli
