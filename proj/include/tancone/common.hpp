#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tancone {

using Int = long long;

/// Domain/precondition violations (bad generators, gcd != 1, ring mismatch, ...).
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

class RingMismatch : public MathError {
 public:
  explicit RingMismatch(const std::string& what) : MathError(what) {}
};

class ParseError : public MathError {
 public:
  explicit ParseError(const std::string& what) : MathError(what) {}
};

/// A computation hit its configured degree/pair budget. Distinct from a wrong
/// answer: callers may retry with larger budgets or mark the item as skipped.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent routes to the same value disagreed. Always a bug somewhere;
/// never swallowed.
class OracleMismatch : public std::runtime_error {
 public:
  explicit OracleMismatch(const std::string& what) : std::runtime_error(what) {}
};

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw MathError("integer overflow in multiply");
  return r;
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw MathError("integer overflow in add");
  return r;
}

}  // namespace tancone
