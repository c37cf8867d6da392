#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

/// Input violates an operation's precondition (bad prime, non-symmetric
/// partition where one is required, malformed text, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The p-adic precision carried by a Navarro automorphism is too small
/// for the value it is applied to. Callers widen and retry.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scan or group computation exceeded its configured size limit.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Signals a bug in an internal consistency check (never expected).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
inline void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}
}  // namespace detail

}  // namespace mckay
