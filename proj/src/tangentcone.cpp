#include "tancone/tangentcone.hpp"

#include <algorithm>

#include "tancone/toric.hpp"

namespace tancone {

namespace {

std::vector<Polynomial> drop_zeros(const std::vector<Polynomial>& v) {
  std::vector<Polynomial> out;
  for (const Polynomial& p : v)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

}  // namespace

StandardBasisResult standard_basis(const std::vector<Polynomial>& I_gens,
                                   const StandardBasisOptions& opts) {
  std::vector<Polynomial> gens = drop_zeros(I_gens);
  StandardBasisResult res;
  if (gens.empty()) return res;
  int n = gens.front().nvars();
  for (const Polynomial& g : gens) {
    if (g.nvars() != n) throw RingMismatch("standard_basis: mixed rings");
    if (total_degree(g.terms().back().mono) == 0)
      throw MathError("standard_basis: ideal contains a unit");
  }

  // embed into K[s, x1..xn] with s at index 0, homogenize, saturate by s
  std::vector<int> embed(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) embed[static_cast<size_t>(i)] = i + 1;
  std::vector<Polynomial> hom;
  for (const Polynomial& g : gens) hom.push_back(g.map_variables(n + 1, embed).homogenize(0));
  bool changed = false;
  std::vector<Polynomial> sat = saturate_by_variable(hom, 0, opts.gb, &changed);
  res.saturation_changed = changed;

  MonomialOrder ord =
      opts.strict_lex ? MonomialOrder::lex(n + 1)
                      : MonomialOrder::block({0}, MonomialOrder::Kind::Lex,
                                             MonomialOrder::Kind::DegRevLex, n + 1);
  GroebnerBasis gb = buchberger(sat, ord, opts.gb);

  std::vector<int> back(static_cast<size_t>(n) + 1, -1);
  for (int i = 0; i < n; ++i) back[static_cast<size_t>(i) + 1] = i;
  std::vector<Polynomial> sb;
  for (const Polynomial& g : gb.elements) {
    Polynomial d = g.dehomogenize(0).map_variables(n, back);
    if (!d.is_zero()) sb.push_back(d);
  }
  res.standard_basis = canonical_generator_list(sb);

  if (opts.verify_membership) {
    GroebnerBasis igb = buchberger(gens, MonomialOrder::degrevlex(n), opts.gb);
    for (const Polynomial& f : res.standard_basis)
      if (!membership(f, igb))
        throw OracleMismatch("standard basis element escaped the input ideal");
  }

  std::vector<Polynomial> initials;
  for (const Polynomial& f : res.standard_basis) initials.push_back(f.initial_form().first);
  res.initial_ideal_gens = canonical_generator_list(initials);
  res.minimal_star_gens =
      minimal_generators(res.initial_ideal_gens, Grading::standard(n), opts.gb);
  res.mu_star = static_cast<int>(res.minimal_star_gens.size());
  return res;
}

bool is_standard_basis(const std::vector<Polynomial>& gens,
                       const std::vector<Polynomial>& I_gens,
                       const StandardBasisOptions& opts) {
  std::vector<Polynomial> cand = drop_zeros(gens);
  std::vector<Polynomial> igens = drop_zeros(I_gens);
  if (cand.empty()) return igens.empty();
  if (igens.empty()) throw MathError("is_standard_basis: candidate not contained in the zero ideal");
  GroebnerBasis igb = buchberger(igens, MonomialOrder::degrevlex(igens.front().nvars()), opts.gb);
  for (const Polynomial& f : cand)
    if (!membership(f, igb))
      throw MathError("is_standard_basis: candidate element is not in the ideal");
  StandardBasisResult sb = standard_basis(igens, opts);
  std::vector<Polynomial> initials;
  for (const Polynomial& f : cand) initials.push_back(f.initial_form().first);
  return ideal_equal(initials, sb.initial_ideal_gens, opts.gb);
}

bool tangent_cone_is_cm_from_star(const std::vector<Polynomial>& star_gens,
                                  const GroebnerConfig& cfg) {
  std::vector<Polynomial> star = drop_zeros(star_gens);
  if (star.empty()) return true;
  Polynomial x1 = Polynomial::variable(star.front().nvars(), 0);
  std::vector<Polynomial> quot = ideal_quotient(star, x1, cfg);
  return ideal_equal(quot, star, cfg);
}

bool tangent_cone_is_cm(const NumericalSemigroup& H, const StandardBasisOptions& opts) {
  if (H.mu() < 2) throw MathError("tangent_cone_is_cm requires at least two generators");
  StandardBasisResult sb = standard_basis(toric_ideal(H, opts.gb), opts);
  return tangent_cone_is_cm_from_star(sb.minimal_star_gens, opts.gb);
}

MuRecord mu_and_mu_star(const NumericalSemigroup& H, const StandardBasisOptions& opts) {
  MuRecord rec;
  std::vector<Polynomial> gens = toric_ideal(H, opts.gb);
  if (gens.empty()) return rec;
  rec.mu_I = static_cast<int>(minimal_generators(gens, toric_grading(H), opts.gb).size());
  rec.mu_I_star = standard_basis(gens, opts).mu_star;
  return rec;
}

TangentCone tangent_cone_of(const NumericalSemigroup& H, const StandardBasisOptions& opts) {
  TangentCone tc{H.normalized(), {}, {}, 0, false, 0};
  tc.ideal_gens = toric_ideal(tc.H, opts.gb);
  if (!tc.ideal_gens.empty()) {
    tc.sb = standard_basis(tc.ideal_gens, opts);
    tc.mu_I = static_cast<int>(
        minimal_generators(tc.ideal_gens, toric_grading(tc.H), opts.gb).size());
    tc.cm = tangent_cone_is_cm_from_star(tc.sb.minimal_star_gens, opts.gb);
  } else {
    tc.cm = true;  // polynomial ring
  }

  // master cross-check: Hilbert function of S/I* against the
  // factorization-length oracle
  Int maxdeg = 2;
  for (const Polynomial& g : tc.sb.minimal_star_gens)
    maxdeg = std::max(maxdeg, g.total_degree());
  tc.oracle_dmax = 2 * maxdeg + 2;
  std::vector<Polynomial> star = tc.sb.minimal_star_gens;
  if (star.empty()) star.push_back(Polynomial::zero(tc.H.mu()));
  std::vector<Int> hf = hilbert_function(star, tc.oracle_dmax, opts.gb);
  std::vector<Int> oracle = tc.H.tangent_hilbert_oracle(tc.oracle_dmax);
  if (hf != oracle)
    throw OracleMismatch("tangent cone Hilbert function disagrees with the semigroup oracle for " +
                         tc.H.str());
  return tc;
}

}  // namespace tancone
