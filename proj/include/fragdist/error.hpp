#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fragdist {

// Domain error carrying a stable machine-readable code alongside the
// human-readable message. Codes in use: "invalid-parameter",
// "out-of-range", "conditioning-on-null-event", "truncation-too-small",
// "precondition-violated", "insufficient-data", "domain-error",
// "resolution-error", "solver-failure". The CLI maps these to
// {"code":..., "message":...} JSON and exit code 1.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& message) {
    throw error(code, message);
}

}  // namespace fragdist
