#pragma once
#include <stdexcept>
#include <string>

namespace awfslab {

// Contract violations and unusable inputs carry a short machine-readable code
// next to the human message; the CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace awfslab
