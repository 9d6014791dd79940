#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bkneser {

/// Thrown when an operation is called outside its parameter domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an exhaustive computation would exceed a configured guard.
/// `guard()` names the limit so callers can tell the user which knob to raise.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(std::string guard, std::uint64_t limit, const std::string& what)
      : std::runtime_error(what + " (guard " + guard + "=" + std::to_string(limit) +
                           " exceeded; raise it explicitly to proceed)"),
        guard_(std::move(guard)),
        limit_(limit) {}

  const std::string& guard() const { return guard_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::string guard_;
  std::uint64_t limit_;
};

}  // namespace bkneser
