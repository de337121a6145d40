#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tancone/common.hpp"

namespace tancone {

/// Numerical semigroup held by its minimal generating system. gcd of the
/// generators need not be 1; operations that require gcd 1 (Frobenius, Apery,
/// symmetry, the tangent-cone Hilbert oracle) reject other inputs.
///
/// Immutable after construction. Copies share the internal memo tables, which
/// grow lazily under a mutex, so values can be used from parallel workers.
class NumericalSemigroup {
 public:
  NumericalSemigroup() : NumericalSemigroup({1}, 1) {}  // <1>

  static NumericalSemigroup from_generators(const std::vector<Int>& raw);

  const std::vector<Int>& generators() const { return gens_; }
  Int gcd() const { return gcd_; }
  Int multiplicity() const { return gens_.front(); }
  Int width() const { return gens_.back() - gens_.front(); }
  int mu() const { return static_cast<int>(gens_.size()); }

  struct Invariants {
    int mu;
    Int width;
    Int multiplicity;
  };
  Invariants invariants() const { return {mu(), width(), multiplicity()}; }

  bool contains(Int n) const;

  /// Least element of H in each residue class mod m, indexed by residue.
  /// Requires gcd 1, m in H, m > 0.
  std::vector<Int> apery_set(Int m) const;

  /// Largest integer not in H; -1 for <1>. Requires gcd 1.
  Int frobenius_number() const;

  NumericalSemigroup shift(Int k) const;

  /// Semigroup generated by every integer in [a_1, a_r], re-minimalized.
  NumericalSemigroup interval_completion() const;

  /// Exactly one of s, F-s lies in H for every 0 <= s <= F. Requires gcd 1.
  bool is_symmetric() const;

  /// max { sum alpha_i : sum alpha_i a_i = h }. Requires h in H, h > 0.
  Int max_factorization_length(Int h) const;

  /// Entry n = #{h in H : max factorization length n}; the Hilbert function
  /// of the tangent cone of K[H]. Requires gcd 1.
  std::vector<Int> tangent_hilbert_oracle(Int dmax) const;

  /// Smallest k such that every shift j >= k keeps all mu(H) generators
  /// minimal, per the a_r - 2a_1 bound.
  Int stable_shift_bound() const { return gens_.back() - 2 * gens_.front() + 1 > 0
                                            ? gens_.back() - 2 * gens_.front() + 1
                                            : 0; }

  /// H with all generators divided by their gcd (isomorphic semigroup ring).
  NumericalSemigroup normalized() const;

  bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }
  bool operator!=(const NumericalSemigroup& o) const { return gens_ != o.gens_; }

  /// "<3,5,7>"
  std::string str() const;
  /// Accepts "<3,5,7>", "3,5,7", with optional spaces.
  static NumericalSemigroup parse(const std::string& text);

 private:
  NumericalSemigroup(std::vector<Int> gens, Int g);

  // Lazily grown tables shared by copies.
  struct Memo {
    std::mutex mu;
    std::vector<char> member;  // member[n] != 0 iff n in H; grown monotonically
    std::vector<Int> ord;      // max factorization length; -1 for non-members
    Int frobenius = -2;        // -2: not computed
  };

  void ensure_tables(Int bound) const;  // caller must NOT hold the mutex
  bool member_raw(Int n) const;         // table lookup, no Frobenius shortcut

  std::vector<Int> gens_;
  Int gcd_ = 0;
  std::shared_ptr<Memo> memo_;
};

}  // namespace tancone
