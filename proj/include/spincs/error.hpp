#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace spincs {

// Domain error carrying a stable machine-readable code ("ring_mismatch",
// "duality_failure", ...). The CLI maps these to exit status 1 and prints
// the code so callers can tell which module contract was violated.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& what) {
    throw Error(std::move(code), what);
}

} // namespace spincs
