#include "tancone/toric.hpp"

#include <algorithm>
#include <map>

namespace tancone {

Ring toric_ring(const NumericalSemigroup& H) { return Ring::curve(H.mu()); }

Grading toric_grading(const NumericalSemigroup& H) {
  return Grading(H.normalized().generators());
}

bool vanishes_under_parametrization(const Polynomial& f, const std::vector<Int>& weights) {
  std::map<Int, Rational> image;
  for (const Term& t : f.terms()) {
    Int d = 0;
    for (size_t i = 0; i < weights.size(); ++i)
      d = checked_add(d, checked_mul(weights[i], t.mono[i]));
    image[d] += t.coeff;
  }
  for (const auto& [deg, c] : image)
    if (c != 0) return false;
  return true;
}

std::vector<Polynomial> toric_ideal(const NumericalSemigroup& H, const GroebnerConfig& cfg) {
  NumericalSemigroup N = H.normalized();
  const std::vector<Int>& a = N.generators();
  int r = N.mu();
  if (r == 1) return {};  // K[H] = K[t^a] is a polynomial ring
  // K[t, x1..xr], t in front; eliminate t from (x_i - t^{a_i})
  int n = r + 1;
  std::vector<Polynomial> param;
  for (int i = 0; i < r; ++i) {
    Exponents tpow(static_cast<size_t>(n), 0);
    tpow[0] = static_cast<int>(a[static_cast<size_t>(i)]);
    param.push_back(Polynomial::variable(n, i + 1) - Polynomial::monomial(n, tpow));
  }
  std::vector<Polynomial> elim = eliminate(param, {0}, cfg);
  std::vector<int> back(static_cast<size_t>(n), -1);
  for (int i = 0; i < r; ++i) back[static_cast<size_t>(i) + 1] = i;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : elim) gens.push_back(g.map_variables(r, back));
  gens = canonical_generator_list(gens);

  Grading hg(a);
  for (const Polynomial& g : gens) {
    if (!g.weighted_degree(hg))
      throw OracleMismatch("toric generator not H-homogeneous for " + H.str());
    if (!vanishes_under_parametrization(g, a))
      throw OracleMismatch("toric generator fails the substitution check for " + H.str());
  }
  return gens;
}

namespace {

// least c >= 1 with c*n representable in the semigroup of the other two,
// together with a witness (alpha, beta); representation by enumeration.
struct Multiple {
  Int c;
  Int alpha, beta;
};

Multiple least_multiple(Int n, Int p, Int q) {
  for (Int c = 1;; ++c) {
    Int target = c * n;
    for (Int alpha = 0; alpha * p <= target; ++alpha) {
      Int rest = target - alpha * p;
      if (rest % q == 0) return {c, alpha, rest / q};
    }
  }
}

}  // namespace

HerzogData herzog_data(const NumericalSemigroup& H) {
  NumericalSemigroup N = H.normalized();
  if (N.mu() != 3) throw MathError("herzog_data requires a 3-generated semigroup");
  const std::vector<Int>& g = N.generators();
  HerzogData d;
  // row i: c_i n_i = r_ij n_j + r_ik n_k with (j,k) the other two indices.
  // least_multiple scans alpha on the smaller-index generator, which yields the
  // lexicographically smallest witness when the decomposition is not unique.
  int other[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int i = 0; i < 3; ++i) {
    int j = other[i][0], k = other[i][1];
    Multiple m = least_multiple(g[static_cast<size_t>(i)], g[static_cast<size_t>(j)],
                                g[static_cast<size_t>(k)]);
    d.c[static_cast<size_t>(i)] = m.c;
    d.r[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.alpha;
    d.r[static_cast<size_t>(i)][static_cast<size_t>(k)] = m.beta;
  }
  return d;
}

std::array<Polynomial, 3> herzog_generators(const HerzogData& d) {
  const int n = 3;
  auto mono = [&](Int e0, Int e1, Int e2) {
    return Polynomial::monomial(
        n, Exponents{static_cast<int>(e0), static_cast<int>(e1), static_cast<int>(e2)});
  };
  Polynomial f1 = mono(d.c[0], 0, 0) - mono(0, d.r[0][1], d.r[0][2]);
  Polynomial f2 = mono(0, d.c[1], 0) - mono(d.r[1][0], 0, d.r[1][2]);
  Polynomial f3 = mono(0, 0, d.c[2]) - mono(d.r[2][0], d.r[2][1], 0);
  return {f1, f2, f3};
}

}  // namespace tancone
