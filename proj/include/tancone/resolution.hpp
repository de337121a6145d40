#pragma once

#include <map>

#include "tancone/groebner.hpp"

namespace tancone {

/// Total and graded Betti numbers of S/I. total[0] = 1, total[1] = mu(I).
struct BettiTable {
  std::vector<Int> total;
  std::vector<std::map<Int, Int>> graded;  // per homological index: degree -> count

  bool operator==(const BettiTable& o) const { return total == o.total && graded == o.graded; }
  bool operator!=(const BettiTable& o) const { return !(*this == o); }
  int projdim() const { return static_cast<int>(total.size()) - 1; }
};

/// Graded map between free modules. entries[i][j] is the coefficient of
/// target generator i in the image of source generator j; column j is
/// homogeneous of degree source_degrees[j] - target_degrees[i] in each entry.
struct FreeModuleMap {
  std::vector<std::vector<Polynomial>> entries;  // [target][source]
  std::vector<Int> target_degrees;
  std::vector<Int> source_degrees;

  int target_rank() const { return static_cast<int>(target_degrees.size()); }
  int source_rank() const { return static_cast<int>(source_degrees.size()); }
};

/// A*B, for the composition checks.
FreeModuleMap compose(const FreeModuleMap& A, const FreeModuleMap& B);
bool is_zero_map(const FreeModuleMap& M);
/// True when no entry is a nonzero constant (the minimality criterion).
bool has_no_unit_entries(const FreeModuleMap& M);

/// Generators of the kernel of the map (columns of M as elements of the free
/// module on M's target), via cofactor-tracked module Buchberger over a
/// Schreyer-style S-pair sweep. Columns of the result compose to zero with M.
FreeModuleMap syzygies(const FreeModuleMap& M, const Grading& g, const GroebnerConfig& cfg = {});

struct Resolution {
  Grading grading;
  std::vector<FreeModuleMap> maps;  // d1: F1 -> S, d2: F2 -> F1, ...
  BettiTable betti;                 // of S/I
};

/// Minimal graded free resolution of S/I for a positive grading g: minimal
/// generators of the kernel at every level (graded Nakayama), so each map has
/// no unit entries. Composition-zero and minimality are verified before
/// returning. At most 8 variables.
Resolution minimal_free_resolution_full(const std::vector<Polynomial>& I_gens, const Grading& g,
                                        const GroebnerConfig& cfg = {});
BettiTable minimal_free_resolution(const std::vector<Polynomial>& I_gens, const Grading& g,
                                   const GroebnerConfig& cfg = {});

/// Closed-form Betti numbers of K[H] for H generated by an arithmetic
/// sequence with gcd(a1, d) = 1 and r = mu(H): depends only on r and
/// a1 mod (r-1).
Int gss_betti(int r, Int a1, int i);

Int binomial(Int n, Int k);

}  // namespace tancone
