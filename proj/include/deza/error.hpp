#ifndef DEZA_ERROR_HPP
#define DEZA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace deza {

/// Raised when an operation's domain precondition fails. `code` is a short
/// stable identifier (e.g. "not-automorphism") surfaced by the CLI.
class DomainError : public std::invalid_argument {
 public:
  DomainError(std::string code, const std::string& detail)
      : std::invalid_argument(detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace deza

#endif  // DEZA_ERROR_HPP
