#ifndef FOLINT_CLI_HPP
#define FOLINT_CLI_HPP

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "folint/varset.hpp"

namespace folint {

enum class OutputFormat { plain, json, csv };

// One CLI invocation. Inputs are file paths ("-" reads standard input).
// Results go to `out` (or --out), diagnostics to `err`.
struct JobConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string chart;
    double step = 1e-3;
    std::size_t n_steps = 1000;
    double escape = 2.0;
    std::optional<double> tol;  // per-command default when unset
    std::string direction = "1";
    OutputFormat format = OutputFormat::plain;
    std::string out_path;
    std::optional<VarSet> vars;
};

// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input error.
int run_command(const JobConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace folint

#endif
