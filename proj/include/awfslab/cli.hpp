#pragma once
#include <string>
#include <vector>

#include "awfslab/json_io.hpp"

namespace awfslab {

extern const char* kToolVersion;

struct CliResult {
    int exit_code = 0; // 0 pass, 1 fail with witness, 2 input error, 3 budget exhausted
    Json report;
};

// Routes a full argument vector (excluding the program name) to the named
// operation. Never throws: every failure becomes a status-"error" report.
// Commands taking --out additionally write canonical JSON files.
CliResult dispatch(const std::vector<std::string>& args);

} // namespace awfslab
