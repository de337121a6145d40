#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tancone/common.hpp"

namespace tancone {

using Rational = mpq_class;

/// Exponent vector of a monomial; length = number of ring variables.
using Exponents = std::vector<int>;

/// Names of the ambient polynomial ring's variables, in order priority
/// (index 0 prints first and is the "largest" variable for lex-style orders).
/// Algebraic code only cares about the variable count; names exist for
/// parsing and printing.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {}

  /// x1..xn
  static Ring standard(int n);
  /// x,y,z,t for n <= 4 (the usual display for small semigroup rings),
  /// x1..xn otherwise.
  static Ring curve(int n);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  /// -1 when absent.
  int index_of(const std::string& name) const;

  /// New ring with `name` prepended at index 0 (order priority above all).
  Ring with_front_variable(const std::string& name) const;
  /// New ring with `name` appended at the last index.
  Ring with_back_variable(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

inline Int total_degree(const Exponents& e) {
  Int d = 0;
  for (int x : e) d += x;
  return d;
}

inline bool exp_divides(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents exp_mul(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] + b[i];
    if (r[i] < 0) throw MathError("exponent overflow");
  }
  return r;
}

/// a/b, requires b | a.
inline Exponents exp_div(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) throw MathError("exponent division underflow");
  }
  return r;
}

inline Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

inline bool exp_coprime(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

struct Term {
  Rational coeff;   // nonzero in any canonical polynomial
  Exponents mono;
};

}  // namespace tancone
