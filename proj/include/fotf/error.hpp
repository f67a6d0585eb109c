#pragma once

#include <stdexcept>
#include <string>

namespace fotf {

enum class ErrorKind {
    Domain,     // invalid argument / precondition violation
    Numeric,    // branch cut, pole hit, rank deficiency, divergence
    Io,         // file / serialization problems
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_domain(const std::string& msg) {
    throw Error(ErrorKind::Domain, msg);
}
[[noreturn]] inline void throw_numeric(const std::string& msg) {
    throw Error(ErrorKind::Numeric, msg);
}
[[noreturn]] inline void throw_io(const std::string& msg) {
    throw Error(ErrorKind::Io, msg);
}

}  // namespace fotf
