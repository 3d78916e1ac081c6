#pragma once

#include <stdexcept>
#include <string>

namespace bonediff {

// Error taxonomy mirrored by the C API status codes and the CLI exit codes.
enum class ErrorKind {
    invalid_argument,  // bad call, bad config, usage
    data,              // I/O, corrupt or inconsistent files
    numeric,           // non-finite values, invalid radicands, degenerate input
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }
[[noreturn]] inline void fail_arg(const std::string& msg) { fail(ErrorKind::invalid_argument, msg); }
[[noreturn]] inline void fail_data(const std::string& msg) { fail(ErrorKind::data, msg); }
[[noreturn]] inline void fail_numeric(const std::string& msg) { fail(ErrorKind::numeric, msg); }

inline void require(bool cond, ErrorKind k, const std::string& msg) {
    if (!cond) fail(k, msg);
}
inline void require_arg(bool cond, const std::string& msg) {
    require(cond, ErrorKind::invalid_argument, msg);
}

}  // namespace bonediff
