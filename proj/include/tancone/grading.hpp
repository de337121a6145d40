#pragma once

#include <vector>

#include "tancone/ring.hpp"

namespace tancone {

/// Positive integer weights, one per variable. The standard grading is
/// all-ones; semigroup rings use deg x_i = a_i.
struct Grading {
  std::vector<Int> weights;

  Grading() = default;
  explicit Grading(std::vector<Int> w) : weights(std::move(w)) {
    for (Int x : weights)
      if (x < 1) throw MathError("grading weights must be positive");
  }

  static Grading standard(int n) { return Grading(std::vector<Int>(static_cast<size_t>(n), 1)); }

  int nvars() const { return static_cast<int>(weights.size()); }

  Int degree(const Exponents& e) const {
    if (e.size() != weights.size()) throw RingMismatch("grading/ring size mismatch");
    Int d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += checked_mul(weights[i], e[i]);
    return d;
  }

  bool is_standard() const {
    for (Int x : weights)
      if (x != 1) return false;
    return true;
  }
};

}  // namespace tancone
