#ifndef LIETORUS_ERROR_HPP
#define LIETORUS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lt {

/// Error with a stable machine-readable code (used by the CLI to map to exit 2
/// diagnostics and by tests to assert on specific failure modes).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, const std::string& code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace lt

#endif
