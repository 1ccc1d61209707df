#ifndef HILBERT_CHOW_ERROR_HPP
#define HILBERT_CHOW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hilbert_chow {

/// Error categories. The numeric values are the CLI exit codes.
enum class ErrorKind : int {
  input = 2,     ///< malformed input, schema violations, bad arguments
  domain = 3,    ///< mathematically invalid request (incidence, non-stabilized, ...)
  identity = 4,  ///< an exact identity check returned a nonzero residual
  internal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Short machine-readable code, e.g. "incidence" or "non_stabilized".
  const std::string& code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error input_error(std::string code, const std::string& message) {
  return Error(ErrorKind::input, std::move(code), message);
}
inline Error domain_error(std::string code, const std::string& message) {
  return Error(ErrorKind::domain, std::move(code), message);
}
inline Error identity_error(std::string code, const std::string& message) {
  return Error(ErrorKind::identity, std::move(code), message);
}
inline Error internal_error(const std::string& message) {
  return Error(ErrorKind::internal, "internal", message);
}

}  // namespace hilbert_chow

#endif  // HILBERT_CHOW_ERROR_HPP
