#include "tancone/families.hpp"

#include <numeric>

#include "tancone/resolution.hpp"

namespace tancone {

namespace {

Polynomial mono3(Int ex, Int ey, Int ez) {
  return Polynomial::monomial(
      3, Exponents{static_cast<int>(ex), static_cast<int>(ey), static_cast<int>(ez)});
}

Polynomial mono4(Int ex, Int ey, Int ez, Int et) {
  return Polynomial::monomial(4, Exponents{static_cast<int>(ex), static_cast<int>(ey),
                                           static_cast<int>(ez), static_cast<int>(et)});
}

}  // namespace

FamilyExpectation sally(int e) {
  if (e < 5) throw MathError("Sally family requires e >= 5");
  std::vector<Int> gens;
  for (Int i = e; i <= 2 * e - 1; ++i)
    if (i != e + 2 && i != e + 3) gens.push_back(i);
  FamilyExpectation fam;
  fam.family = "sally";
  fam.semigroup = NumericalSemigroup::from_generators(gens);
  fam.expected_mu_I = std::nullopt;  // not fixed by Sally's theorem
  fam.expected_mu_star = static_cast<int>(binomial(e - 2, 2));
  std::multiset<Int> degrees;
  for (int i = 1; i < fam.expected_mu_star; ++i) degrees.insert(2);
  degrees.insert(4);
  fam.expected_star_degrees = std::move(degrees);
  fam.expected_frobenius = 2 * static_cast<Int>(e) + 3;
  fam.expected_symmetric = true;
  // I* lives in variables avoiding the dimension variable entirely, so the
  // multiplicity element stays regular on the tangent cone
  fam.expected_cm = true;
  return fam;
}

FamilyExpectation bresinsky(int h) {
  if (h < 2) throw MathError("Bresinsky family requires h >= 2");
  Int H = h;
  std::vector<Int> gens = {(2 * H - 1) * 2 * H, (2 * H - 1) * (2 * H + 1), 2 * H * (2 * H + 1),
                           2 * H * (2 * H + 1) + 2 * H - 1};
  FamilyExpectation fam;
  fam.family = "bresinsky";
  fam.semigroup = NumericalSemigroup::from_generators(gens);
  fam.expected_mu_I = 4 * h;
  fam.expected_mu_star = 4 * h;
  fam.expected_cm = true;

  // standard basis: f_i = z^{i-1} t^{2h-i} - y^{2h-i} x^{i+1} (1<=i<=2h),
  // g2 = xt - yz, u_j = x^{2h+1-j} z^j - y^{2h-j} t^j (0<=j<=2h-2)
  for (Int i = 1; i <= 2 * H; ++i)
    fam.standard_basis_candidate.push_back(mono4(0, 0, i - 1, 2 * H - i) -
                                           mono4(i + 1, 2 * H - i, 0, 0));
  fam.standard_basis_candidate.push_back(mono4(1, 0, 0, 1) - mono4(0, 1, 1, 0));
  for (Int j = 0; j <= 2 * H - 2; ++j)
    fam.standard_basis_candidate.push_back(mono4(2 * H + 1 - j, 0, j, 0) -
                                           mono4(0, 2 * H - j, 0, j));

  // I* = (t^{2h-1}, z t^{2h-2}, ..., z^{2h-1}) + (xt - yz)
  //      + (y^{2h}, y^{2h-1} t, ..., y^2 t^{2h-2})
  for (Int i = 0; i <= 2 * H - 1; ++i) fam.expected_star_gens.push_back(mono4(0, 0, i, 2 * H - 1 - i));
  fam.expected_star_gens.push_back(mono4(1, 0, 0, 1) - mono4(0, 1, 1, 0));
  for (Int j = 0; j <= 2 * H - 2; ++j) fam.expected_star_gens.push_back(mono4(0, 2 * H - j, 0, j));
  return fam;
}

FamilyExpectation shibuta_variant(int a) {
  if (a <= 3) throw MathError("Shibuta-variant family requires a > 3");
  Int A = a;
  FamilyExpectation fam;
  fam.family = "shibuta";
  fam.semigroup = NumericalSemigroup::from_generators({A, A + 1, 2 * A + 3});
  fam.expected_mu_star = static_cast<int>((A - 1) / 3 + 3);
  // xz lies in I* while z does not, so the multiplicity variable is a
  // zerodivisor on the tangent cone
  fam.expected_cm = false;

  Int k = A / 3;
  int residue = static_cast<int>(A % 3);
  Polynomial g = mono3(1, 0, 1) - mono3(0, 3, 0);  // xz - y^3

  Polynomial f0;
  std::optional<Polynomial> p;
  switch (residue) {
    case 1:  // a = 3k+1: f0 = y z^k - x^{2k+2}, p = z^{k+1} - x^{2k+1} y^2
      f0 = mono3(0, 1, k) - mono3(2 * k + 2, 0, 0);
      p = mono3(0, 0, k + 1) - mono3(2 * k + 1, 2, 0);
      fam.expected_mu_I = 3;
      break;
    case 2:  // a = 3k+2: f0 = y^2 z^k - x^{2k+3}, p = z^{k+1} - x^{2k+2} y
      f0 = mono3(0, 2, k) - mono3(2 * k + 3, 0, 0);
      p = mono3(0, 0, k + 1) - mono3(2 * k + 2, 1, 0);
      fam.expected_mu_I = 3;
      break;
    default:  // a = 3k: complete intersection, f0 = z^k - x^{2k+1}
      f0 = mono3(0, 0, k) - mono3(2 * k + 1, 0, 0);
      fam.expected_mu_I = 2;
      break;
  }

  // f_i = x f_{i-1} - y^(y-degree of f_{i-1}*) z^{k-i} g  closes to
  // f_i = y^{3i+residue} z^{k-i} - x^{...}
  std::vector<Polynomial> fs{f0};
  for (Int i = 1; i <= k; ++i) {
    const Polynomial& prev = fs.back();
    int ydeg = prev.initial_form().first.terms().front().mono[1];
    Polynomial mult = mono3(0, ydeg, k - i);
    fs.push_back(Polynomial::variable(3, 0) * prev - mult * g);
  }

  fam.standard_basis_candidate.push_back(g);
  if (p) fam.standard_basis_candidate.push_back(*p);
  for (const Polynomial& f : fs) fam.standard_basis_candidate.push_back(f);

  fam.expected_star_gens.push_back(mono3(1, 0, 1));  // xz
  if (residue == 0) {
    fam.expected_star_gens.push_back(mono3(0, 0, k));  // z^k = f0*
    for (Int i = 1; i <= k; ++i) fam.expected_star_gens.push_back(mono3(0, 3 * i, k - i));
  } else {
    fam.expected_star_gens.push_back(mono3(0, 0, k + 1));  // z^{k+1} = p*
    for (Int i = 0; i <= k; ++i)
      fam.expected_star_gens.push_back(mono3(0, 3 * i + residue, k - i));
  }
  return fam;
}

FamilyExpectation frobenius_family(Int a, Int b) {
  if (a > b) std::swap(a, b);
  if (a <= 3 || b <= 3) throw MathError("Frobenius family requires a, b > 3");
  if (std::gcd(a, b) != 1) throw MathError("Frobenius family requires coprime a, b");
  FamilyExpectation fam;
  fam.family = "frobenius";
  fam.semigroup = NumericalSemigroup::from_generators({a, b, a * b - a - b});
  fam.expected_mu_I = 3;
  fam.expected_mu_star = 4;
  fam.expected_cm = false;
  fam.standard_basis_candidate = {
      mono3(b - 1, 0, 0) - mono3(0, 1, 1),          // f1 = x^{b-1} - yz
      mono3(0, a - 1, 0) - mono3(1, 0, 1),          // f2 = y^{a-1} - xz
      mono3(0, 0, 2) - mono3(b - 2, a - 2, 0),      // f3 = z^2 - x^{b-2} y^{a-2}
      mono3(b, 0, 0) - mono3(0, a, 0),              // f4 = x f1 - y f2 = x^b - y^a
  };
  fam.expected_star_gens = {mono3(0, 1, 1), mono3(1, 0, 1), mono3(0, 0, 2), mono3(0, a, 0)};
  return fam;
}

ArithmeticFamily arithmetic_family(Int a1, Int d, int r) {
  if (r < 3) throw MathError("arithmetic family requires r >= 3");
  if (a1 < 1 || d < 1) throw MathError("arithmetic family requires a1, d >= 1");
  if (std::gcd(a1, d) != 1) throw MathError("arithmetic family requires gcd(a1, d) = 1");
  std::vector<Int> seq;
  for (int i = 0; i < r; ++i) seq.push_back(a1 + i * d);
  NumericalSemigroup H = NumericalSemigroup::from_generators(seq);
  if (H.generators() != seq)
    throw MathError("arithmetic sequence is not a minimal generating set");

  ArithmeticFamily fam;
  fam.a1 = a1;
  fam.d = d;
  fam.r = r;
  fam.b = static_cast<int>((a1 - 1) % (r - 1) + 1);
  fam.a = (a1 - fam.b) / (r - 1);
  fam.base.family = "arithmetic";
  fam.base.semigroup = H;

  auto var = [&](int i) { return Polynomial::variable(r, i); };  // 0-indexed
  auto pow = [&](int i, Int e) {
    Exponents m(static_cast<size_t>(r), 0);
    m[static_cast<size_t>(i)] = static_cast<int>(e);
    return Polynomial::monomial(r, std::move(m));
  };
  // xi_ij = x_i x_{j+1} - x_{i+1} x_j for 1 <= i < j <= r-1
  for (int i = 1; i < r; ++i)
    for (int j = i + 1; j <= r - 1; ++j)
      fam.patil_gens.push_back(var(i - 1) * var(j) - var(i) * var(j - 1));
  // Delta_i = x_r^a x_{b+i} - x_1^{a+d} x_i for i = 1..r-b
  for (int i = 1; i <= r - fam.b; ++i)
    fam.patil_gens.push_back(pow(r - 1, fam.a) * var(fam.b + i - 1) -
                             pow(0, fam.a + fam.d) * var(i - 1));

  fam.base.expected_mu_I = static_cast<int>(binomial(r - 1, 2)) + (r - fam.b);
  fam.expected_betti.push_back(1);
  for (int i = 1; i <= r - 1; ++i) fam.expected_betti.push_back(gss_betti(r, a1, i));
  fam.base.expected_mu_star = static_cast<int>(fam.expected_betti[1]);
  return fam;
}

NumericalSemigroup interval_equality_family(Int w, Int k) {
  if (w < 1 || k < 1) throw MathError("interval equality family requires w, k >= 1");
  std::vector<Int> gens;
  for (Int v = k * w + 1; v <= (k + 1) * w + 1; ++v) gens.push_back(v);
  return NumericalSemigroup::from_generators(gens);
}

std::optional<std::pair<Int, Int>> interval_equality_recognize(const NumericalSemigroup& H) {
  const std::vector<Int>& g = H.generators();
  if (g.size() < 2) return std::nullopt;
  for (size_t i = 1; i < g.size(); ++i)
    if (g[i] != g[i - 1] + 1) return std::nullopt;
  Int w = H.width();
  if ((g.front() - 1) % w != 0) return std::nullopt;
  Int k = (g.front() - 1) / w;
  if (k < 1) return std::nullopt;
  return std::make_pair(w, k);
}

}  // namespace tancone
