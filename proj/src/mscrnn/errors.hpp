#pragma once

#include <stdexcept>
#include <string>

namespace mscrnn {

/// Error taxonomy shared by the library and the process exit codes of the
/// CLI: config = 2, data = 3, numeric = 4.
class Error : public std::runtime_error {
public:
  enum class Kind { config = 2, data = 3, numeric = 4 };

  Error(Kind k, const std::string& msg) : std::runtime_error(prefix(k) + msg), kind_(k) {}

  Kind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

  static Error config(const std::string& msg) { return Error(Kind::config, msg); }
  static Error data(const std::string& msg) { return Error(Kind::data, msg); }
  static Error numeric(const std::string& msg) { return Error(Kind::numeric, msg); }

private:
  static std::string prefix(Kind k) {
    switch (k) {
      case Kind::config: return "config error: ";
      case Kind::data: return "data error: ";
      case Kind::numeric: return "numeric error: ";
    }
    return "error: ";
  }
  Kind kind_;
};

}  // namespace mscrnn
