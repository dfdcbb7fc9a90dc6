#pragma once

#include <stdexcept>
#include <string>

namespace nhspec {

enum class ErrorCode {
    InvalidArgument,
    Range,
    DegenerateTime,
    EmptyWindow,
    UnsupportedFamily,
    WrongVariant,
};

// All library failures are reported through this exception; the C API maps
// the code onto its status enum.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace nhspec
