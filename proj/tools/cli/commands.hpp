#pragma once

#include <iosfwd>

#include "cli/config.hpp"

namespace nm::cli {

// Validates and runs one command. Errors are reported on `diag` and mapped
// to exit codes: 2 configuration, 3 I/O, 4 numeric or domain.
int run(const ExperimentConfig& config, std::ostream& diag);

// Full entry point: parses argv, then runs.
int main_entry(int argc, char** argv);

}  // namespace nm::cli
