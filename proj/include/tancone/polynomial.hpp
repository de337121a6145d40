#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tancone/grading.hpp"
#include "tancone/order.hpp"
#include "tancone/ring.hpp"

namespace tancone {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept canonical: nonzero coefficients, distinct monomials, sorted
/// descending under degrevlex with the ring's declared variable order.
/// Immutable value; the empty term list is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(int nvars, Exponents e, Rational c = Rational(1));
  /// Combines duplicates, drops zeros, sorts.
  static Polynomial from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  /// f * (c * x^e)
  Polynomial times_term(const Rational& c, const Exponents& e) const;

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && cmp(*this, o) == 0; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Deterministic total order on polynomials of one ring (term-by-term under
  /// the canonical term order, then coefficients). For sorting generator lists.
  static int cmp(const Polynomial& a, const Polynomial& b);

  Term leading_term(const MonomialOrder& ord) const;
  const Exponents& leading_monomial(const MonomialOrder& ord) const;

  /// Maximum total degree (-1 for the zero polynomial).
  Int total_degree() const;
  bool is_homogeneous() const;
  /// All terms of minimal total degree, signs preserved, plus that degree.
  std::pair<Polynomial, Int> initial_form() const;

  /// Common g-degree of all terms, or nullopt when not g-homogeneous.
  std::optional<Int> weighted_degree(const Grading& g) const;

  /// Pads every term with svar to reach the maximal total degree. svar must
  /// not occur in f.
  Polynomial homogenize(int svar) const;
  /// svar := 1.
  Polynomial dehomogenize(int svar) const;

  bool involves_variable(int i) const;
  /// Exact division by the greatest power of x_i dividing every term; returns
  /// the quotient and that power.
  std::pair<Polynomial, int> divide_out_variable(int i) const;
  /// Maps exponent vectors through `embed` into a ring with `new_nvars`
  /// variables; embed[i] = image index of variable i.
  Polynomial map_variables(int new_nvars, const std::vector<int>& embed) const;

  std::string str(const Ring& ring) const;
  static Polynomial parse(const Ring& ring, const std::string& text);

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;
};

/// Canonical term order used inside Polynomial (degrevlex, identity priority).
int canonical_mono_cmp(const Exponents& a, const Exponents& b);

}  // namespace tancone
