#pragma once

#include <stdexcept>
#include <string>

namespace etcs {

// Error taxonomy mirrored by the CLI exit codes:
// invalid_input -> 2, math -> 3, incompatible -> 4.
enum class ErrorKind { invalid_input, math, incompatible };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) {
    throw Error(ErrorKind::invalid_input, msg);
}
[[noreturn]] inline void fail_math(const std::string& msg) {
    throw Error(ErrorKind::math, msg);
}
[[noreturn]] inline void fail_incompatible(const std::string& msg) {
    throw Error(ErrorKind::incompatible, msg);
}

} // namespace etcs
