#pragma once

#include <vector>

#include "tancone/grading.hpp"
#include "tancone/order.hpp"
#include "tancone/polynomial.hpp"

namespace tancone {

/// Resource guardrails for Buchberger runs. Exceeding any bound raises
/// BudgetExceeded; the engine never truncates silently.
struct GroebnerConfig {
  Int max_degree = 4000;     // largest total degree allowed in any basis element
  long max_pairs = 2000000;  // S-pairs processed per run
  bool chain_criterion = true;
};

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;  // monic, sorted ascending by leading monomial
  bool reduced = false;
};

/// Remainder of f on division by G: no term divisible by any leading monomial
/// of G, and f - result lies in (G). Deterministic (first divisor in list order).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord);

/// Reduced Groebner basis via Buchberger with normal pair selection, the
/// coprime-leading-term skip, and Gebauer-Moeller pair pruning.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                         const GroebnerConfig& cfg = {});

bool membership(const Polynomial& f, const GroebnerBasis& gb);
bool membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                const MonomialOrder& ord, const GroebnerConfig& cfg = {});
bool ideal_equal(const std::vector<Polynomial>& A, const std::vector<Polynomial>& B,
                 const GroebnerConfig& cfg = {});

/// Generators of I intersected with the subring omitting front_vars, returned
/// in the ambient ring (front-variable-free). Block elimination order inside.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::vector<int>& front_vars,
                                  const GroebnerConfig& cfg = {});

/// (I : v^infinity) for a ring variable v. Iterates "divide every reduced-GB
/// element by its v-power, recompute" to a fixpoint, using degrevlex with v
/// cheapest so the fixpoint is the saturation for homogeneous inputs.
/// `changed`, when given, reports whether any division happened (ideal grew).
std::vector<Polynomial> saturate_by_variable(const std::vector<Polynomial>& gens, int v,
                                             const GroebnerConfig& cfg = {},
                                             bool* changed = nullptr);

/// (I : f) via the tag-variable intersection with (f).
std::vector<Polynomial> ideal_quotient(const std::vector<Polynomial>& gens, const Polynomial& f,
                                       const GroebnerConfig& cfg = {});

/// dim_K (S/I)_n for n = 0..dmax; requires standard-homogeneous generators.
/// Computed from the leading-term ideal by staircase recursion.
std::vector<Int> hilbert_function(const std::vector<Polynomial>& gens, Int dmax,
                                  const GroebnerConfig& cfg = {});
std::vector<Int> hilbert_function_of_basis(const GroebnerBasis& gb, Int dmax);

/// Minimal generating sublist under a positive grading (graded Nakayama):
/// sort by degree, keep a generator iff it is not in the ideal of those kept.
std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens, const Grading& g,
                                           const GroebnerConfig& cfg = {});

/// Exact division p / f; throws MathError when f does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& f);

/// Convenience: strip zero polynomials, canonicalize the list order.
std::vector<Polynomial> canonical_generator_list(std::vector<Polynomial> gens);

}  // namespace tancone
