#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qhecke {

// Domain error with a stable machine-readable code, surfaced by the CLI as
// {"error": {"code": ..., "message": ...}} with exit status 1.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error degree_mismatch(int a, int b) {
    return Error("DegreeMismatch",
                 "degrees differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

inline Error cap_exceeded(const std::string& what) { return Error("CapExceeded", what); }

inline Error index_out_of_range(const std::string& what) {
    return Error("IndexOutOfRange", what);
}

}  // namespace qhecke
