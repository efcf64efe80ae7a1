#pragma once

#include <stdexcept>
#include <string>

namespace papi {

enum class ErrorCode {
    invalid_argument,
    dimension,
    degenerate,
    distribution,
    numeric,
    parse,
    integrity,
    io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

const char* error_code_name(ErrorCode code);

} // namespace papi
