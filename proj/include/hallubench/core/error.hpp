#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hallubench {

// Error with a stable machine-readable code; the CLI serializes these as
// JSON on stderr.
class HbError : public std::runtime_error {
 public:
  HbError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw HbError(code, message);
}

inline void require(bool cond, const std::string& code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace hallubench
