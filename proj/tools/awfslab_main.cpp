#include <cstdio>
#include <string>
#include <vector>

#include "awfslab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const awfslab::CliResult r = awfslab::dispatch(args);
    std::fputs(awfslab::canonical_text(r.report).c_str(), stdout);
    return r.exit_code;
}
