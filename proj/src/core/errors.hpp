#pragma once

#include <stdexcept>
#include <string>

namespace maxpi {

enum class ErrorCode {
    invalid_argument,
    parse,
    constants,
    cap_exceeded,
    unsupported,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, int line = 0)
        : std::runtime_error(what), code_(code), line_(line) {}

    ErrorCode code() const { return code_; }
    int line() const { return line_; }

private:
    ErrorCode code_;
    int line_;
};

}  // namespace maxpi
