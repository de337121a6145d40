#pragma once

#include <optional>
#include <set>

#include "tancone/polynomial.hpp"
#include "tancone/semigroup.hpp"

namespace tancone {

/// A family instance together with the closed-form answers its construction
/// predicts. The generic pipeline recomputes everything independently; tests
/// compare against these fields.
struct FamilyExpectation {
  std::string family;
  NumericalSemigroup semigroup;
  std::optional<int> expected_mu_I;
  int expected_mu_star = 0;
  /// Generators of I* in the toric ring (x maps to the smallest generator);
  /// empty when the family fixes no coordinates (Sally).
  std::vector<Polynomial> expected_star_gens;
  std::optional<std::multiset<Int>> expected_star_degrees;
  std::optional<bool> expected_cm;
  std::optional<Int> expected_frobenius;
  std::optional<bool> expected_symmetric;
  /// The displayed standard basis of I, when the family gives one.
  std::vector<Polynomial> standard_basis_candidate;
};

/// S_e = <i : e <= i <= 2e-1, i != e+2, e+3>, e >= 5. Symmetric with
/// Frobenius number 2e+3; mu(I*) = C(e-2, 2) with one quartic generator and
/// the rest quadrics.
FamilyExpectation sally(int e);

/// B_h = <(2h-1)2h, (2h-1)(2h+1), 2h(2h+1), 2h(2h+1)+2h-1>, h >= 2.
/// mu(I) = mu(I*) = 4h, Cohen-Macaulay tangent cone; ships the 4h-element
/// standard basis {f_i} u {xt - yz} u {u_j}.
FamilyExpectation bresinsky(int h);

/// H_a = <a, a+1, 2a+3>, a > 3. mu(I*) = floor((a-1)/3) + 3; the monomial
/// generator list depends on a mod 3. Standard basis built by the x f_{i-1} -
/// y^* z^{k-i} g recursion.
FamilyExpectation shibuta_variant(int a);

/// H_{a,b} = <a, b, ab-a-b> for coprime a, b > 3 (swapped so a < b).
/// I* = (yz, xz, z^2, y^a); mu(I) = 3, mu(I*) = 4 regardless of width.
FamilyExpectation frobenius_family(Int a, Int b);

/// Arithmetic sequence a1, a1+d, ..., a1+(r-1)d with gcd(a1,d) = 1, minimal.
struct ArithmeticFamily {
  FamilyExpectation base;
  std::vector<Polynomial> patil_gens;  // the xi_ij and Delta_i
  Int a1 = 0, d = 0;
  int r = 0;
  int b = 0;  // a1 = a(r-1) + b, 1 <= b <= r-1
  Int a = 0;
  std::vector<Int> expected_betti;  // total betti of S/I (index 0 = 1)
};
ArithmeticFamily arithmetic_family(Int a1, Int d, int r);

/// <kw+1, kw+2, ..., (k+1)w+1>: the conjectured equality family.
NumericalSemigroup interval_equality_family(Int w, Int k);
/// Inverse recognizer: (w, k) when H is exactly of that form, else nullopt.
std::optional<std::pair<Int, Int>> interval_equality_recognize(const NumericalSemigroup& H);

}  // namespace tancone
