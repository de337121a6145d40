#include "tancone/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tancone {

namespace {

std::vector<Polynomial> nonzero(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) out.push_back(g);
  return out;
}

Polynomial make_monic(const Polynomial& f, const MonomialOrder& ord) {
  Rational lc = f.leading_term(ord).coeff;
  return f.scaled(1 / lc);
}

}  // namespace

std::vector<Polynomial> canonical_generator_list(std::vector<Polynomial> gens) {
  std::vector<Polynomial> out = nonzero(gens);
  std::sort(out.begin(), out.end(),
            [](const Polynomial& a, const Polynomial& b) { return Polynomial::cmp(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord) {
  Polynomial h = f;
  Polynomial r(f.nvars());
  while (!h.is_zero()) {
    Term lt = h.leading_term(ord);
    bool reduced = false;
    for (const Polynomial& g : G) {
      if (g.is_zero()) continue;
      Term gl = g.leading_term(ord);
      if (exp_divides(gl.mono, lt.mono)) {
        h = h - g.times_term(lt.coeff / gl.coeff, exp_div(lt.mono, gl.mono));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r = r + Polynomial::monomial(h.nvars(), lt.mono, lt.coeff);
      h = h - Polynomial::monomial(h.nvars(), lt.mono, lt.coeff);
    }
  }
  return r;
}

namespace {

struct SPair {
  int i, j;
  Exponents lcm;
  Int deg;
};

struct PairLess {
  const MonomialOrder* ord;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ord->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

struct ExpLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return canonical_mono_cmp(a, b) < 0;
  }
};

// Gebauer-Moeller update: prune the pending queue against the new element and
// seed the new pairs, applying the coprime (product) criterion.
void update_pairs(std::set<SPair, PairLess>& pairs, const std::vector<Exponents>& lms, int m,
                  bool chain_criterion) {
  const Exponents& lmf = lms[static_cast<size_t>(m)];
  if (!chain_criterion) {
    for (int i = 0; i < m; ++i) {
      if (exp_coprime(lms[static_cast<size_t>(i)], lmf)) continue;
      Exponents gam = exp_lcm(lms[static_cast<size_t>(i)], lmf);
      Int deg = total_degree(gam);
      pairs.insert(SPair{i, m, std::move(gam), deg});
    }
    return;
  }
  for (auto it = pairs.begin(); it != pairs.end();) {
    const Exponents lij = it->lcm;
    if (exp_divides(lmf, lij) && exp_lcm(lms[static_cast<size_t>(it->i)], lmf) != lij &&
        exp_lcm(lms[static_cast<size_t>(it->j)], lmf) != lij)
      it = pairs.erase(it);
    else
      ++it;
  }
  std::map<Exponents, std::vector<int>, ExpLess> by_lcm;
  for (int i = 0; i < m; ++i)
    by_lcm[exp_lcm(lms[static_cast<size_t>(i)], lmf)].push_back(i);
  std::vector<Exponents> kept_lcms;
  for (const auto& [gam, members] : by_lcm) {
    bool redundant = false;
    for (const Exponents& seen : kept_lcms)
      if (exp_divides(seen, gam)) {
        redundant = true;
        break;
      }
    if (redundant) continue;
    kept_lcms.push_back(gam);
    bool coprime = false;
    for (int i : members)
      if (exp_coprime(lms[static_cast<size_t>(i)], lmf)) {
        coprime = true;
        break;
      }
    if (coprime) continue;  // Buchberger's first criterion
    pairs.insert(SPair{members.front(), m, gam, total_degree(gam)});
  }
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& raw_gens, const MonomialOrder& ord,
                         const GroebnerConfig& cfg) {
  std::vector<Polynomial> gens = nonzero(raw_gens);
  if (gens.empty()) throw MathError("buchberger requires a nonzero generator");
  for (const Polynomial& g : gens)
    if (g.nvars() != ord.nvars()) throw RingMismatch("generators do not match order's ring");

  std::vector<Polynomial> basis;
  std::vector<Exponents> lms;
  PairLess less{&ord};
  std::set<SPair, PairLess> pairs(less);

  auto push = [&](const Polynomial& f) {
    Polynomial g = make_monic(f, ord);
    if (g.total_degree() > cfg.max_degree)
      throw BudgetExceeded("degree budget exceeded in buchberger");
    basis.push_back(g);
    lms.push_back(g.leading_monomial(ord));
    update_pairs(pairs, lms, static_cast<int>(basis.size()) - 1, cfg.chain_criterion);
  };

  for (const Polynomial& g : gens) push(g);

  long processed = 0;
  while (!pairs.empty()) {
    SPair p = *pairs.begin();
    pairs.erase(pairs.begin());
    if (++processed > cfg.max_pairs) throw BudgetExceeded("pair budget exceeded in buchberger");
    const Polynomial& fi = basis[static_cast<size_t>(p.i)];
    const Polynomial& fj = basis[static_cast<size_t>(p.j)];
    Term li = fi.leading_term(ord), lj = fj.leading_term(ord);
    Polynomial s = fi.times_term(1 / li.coeff, exp_div(p.lcm, li.mono)) -
                   fj.times_term(1 / lj.coeff, exp_div(p.lcm, lj.mono));
    Polynomial h = normal_form(s, basis, ord);
    if (!h.is_zero()) push(h);
  }

  // reduce: drop elements whose leading monomial another's divides, then
  // tail-reduce against the fixed set of leading terms
  std::vector<int> idx(basis.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    int c = ord.compare(lms[static_cast<size_t>(a)], lms[static_cast<size_t>(b)]);
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<Polynomial> minimal;
  std::vector<Exponents> min_lms;
  for (int i : idx) {
    bool divisible = false;
    for (const Exponents& m : min_lms)
      if (exp_divides(m, lms[static_cast<size_t>(i)])) {
        divisible = true;
        break;
      }
    if (!divisible) {
      minimal.push_back(basis[static_cast<size_t>(i)]);
      min_lms.push_back(lms[static_cast<size_t>(i)]);
    }
  }
  std::vector<Polynomial> reduced(minimal.size(), Polynomial());
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others, ord);
    reduced[i] = make_monic(r, ord);
  }
  return GroebnerBasis{ord, std::move(reduced), true};
}

bool membership(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.is_zero()) return true;
  return normal_form(f, gb.elements, gb.order).is_zero();
}

bool membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                const MonomialOrder& ord, const GroebnerConfig& cfg) {
  if (f.is_zero()) return true;
  std::vector<Polynomial> nz = nonzero(gens);
  if (nz.empty()) return false;
  return membership(f, buchberger(nz, ord, cfg));
}

bool ideal_equal(const std::vector<Polynomial>& A, const std::vector<Polynomial>& B,
                 const GroebnerConfig& cfg) {
  std::vector<Polynomial> a = nonzero(A), b = nonzero(B);
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  if (a.front().nvars() != b.front().nvars()) throw RingMismatch("comparing ideals across rings");
  MonomialOrder ord = MonomialOrder::degrevlex(a.front().nvars());
  GroebnerBasis ga = buchberger(a, ord, cfg);
  for (const Polynomial& g : b)
    if (!membership(g, ga)) return false;
  GroebnerBasis gb = buchberger(b, ord, cfg);
  for (const Polynomial& g : a)
    if (!membership(g, gb)) return false;
  return true;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::vector<int>& front_vars, const GroebnerConfig& cfg) {
  std::vector<Polynomial> nz = nonzero(gens);
  if (nz.empty()) return {};
  int n = nz.front().nvars();
  MonomialOrder ord = MonomialOrder::block(front_vars, MonomialOrder::Kind::DegRevLex,
                                           MonomialOrder::Kind::DegRevLex, n);
  GroebnerBasis gb = buchberger(nz, ord, cfg);
  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.elements) {
    bool free_of_front = true;
    for (int v : front_vars)
      if (g.involves_variable(v)) {
        free_of_front = false;
        break;
      }
    if (free_of_front) out.push_back(g);
  }
  return canonical_generator_list(out);
}

std::vector<Polynomial> saturate_by_variable(const std::vector<Polynomial>& gens, int v,
                                             const GroebnerConfig& cfg, bool* changed) {
  if (changed) *changed = false;
  std::vector<Polynomial> cur = nonzero(gens);
  if (cur.empty()) return {};
  int n = cur.front().nvars();
  if (v < 0 || v >= n) throw MathError("saturation variable out of range");
  // degrevlex with v cheapest: for homogeneous ideals, dividing the reduced
  // basis by v-powers reaches the saturation (Bayer-Stillman)
  std::vector<int> priority;
  for (int i = 0; i < n; ++i)
    if (i != v) priority.push_back(i);
  priority.push_back(v);
  MonomialOrder ord = MonomialOrder::degrevlex(priority);
  for (;;) {
    GroebnerBasis gb = buchberger(cur, ord, cfg);
    bool divided = false;
    std::vector<Polynomial> next;
    for (const Polynomial& g : gb.elements) {
      auto [q, m] = g.divide_out_variable(v);
      divided |= m > 0;
      next.push_back(q);
    }
    if (!divided) return canonical_generator_list(next);
    if (changed) *changed = true;
    cur = std::move(next);
  }
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& f) {
  if (f.is_zero()) throw MathError("division by zero polynomial");
  if (p.nvars() != f.nvars()) throw RingMismatch("division across rings");
  MonomialOrder ord = MonomialOrder::degrevlex(p.nvars());
  Term lf = f.leading_term(ord);
  Polynomial rem = p;
  Polynomial quot(p.nvars());
  while (!rem.is_zero()) {
    Term lr = rem.leading_term(ord);
    if (!exp_divides(lf.mono, lr.mono))
      throw MathError("polynomial division is not exact");
    Rational c = lr.coeff / lf.coeff;
    Exponents e = exp_div(lr.mono, lf.mono);
    quot = quot + Polynomial::monomial(p.nvars(), e, c);
    rem = rem - f.times_term(c, e);
  }
  return quot;
}

std::vector<Polynomial> ideal_quotient(const std::vector<Polynomial>& gens, const Polynomial& f,
                                       const GroebnerConfig& cfg) {
  if (f.is_zero()) throw MathError("ideal quotient by zero");
  std::vector<Polynomial> nz = nonzero(gens);
  if (nz.empty()) return {};
  int n = nz.front().nvars();
  // tag variable w in front: eliminate w from w*I + (1-w)*(f)
  std::vector<int> embed(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) embed[static_cast<size_t>(i)] = i + 1;
  Exponents w(static_cast<size_t>(n) + 1, 0);
  w[0] = 1;
  std::vector<Polynomial> J;
  for (const Polynomial& g : nz) J.push_back(g.map_variables(n + 1, embed).times_term(1, w));
  Polynomial flift = f.map_variables(n + 1, embed);
  Polynomial one_minus_w =
      Polynomial::constant(n + 1, 1) - Polynomial::monomial(n + 1, w);
  J.push_back(one_minus_w * flift);
  std::vector<Polynomial> inter = eliminate(J, {0}, cfg);
  // contract back and divide out f
  std::vector<int> back(static_cast<size_t>(n) + 1, -1);
  for (int i = 0; i < n; ++i) back[static_cast<size_t>(i) + 1] = i;
  std::vector<Polynomial> out;
  for (const Polynomial& g : inter) out.push_back(divide_exact(g.map_variables(n, back), f));
  return canonical_generator_list(out);
}

namespace {

// Hilbert numerator of a monomial ideal as dense integer coefficients:
// Hilb(S/I) = N(t) / (1-t)^n.
using Numerator = std::vector<mpz_class>;

Numerator num_one() { return {mpz_class(1)}; }

// a - t^shift * b
Numerator num_sub_shift(const Numerator& a, const Numerator& b, Int shift) {
  Numerator r = a;
  if (r.size() < b.size() + static_cast<size_t>(shift))
    r.resize(b.size() + static_cast<size_t>(shift), 0);
  for (size_t i = 0; i < b.size(); ++i) r[i + static_cast<size_t>(shift)] -= b[i];
  return r;
}

Numerator num_add_shift(const Numerator& a, const Numerator& b, Int shift) {
  Numerator r = a;
  if (r.size() < b.size() + static_cast<size_t>(shift))
    r.resize(b.size() + static_cast<size_t>(shift), 0);
  for (size_t i = 0; i < b.size(); ++i) r[i + static_cast<size_t>(shift)] += b[i];
  return r;
}

std::vector<Exponents> minimalize_monomials(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end(), ExpLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> out;
  for (const Exponents& g : gens) {
    bool redundant = false;
    for (const Exponents& h : out)  // sorted degree-first: divisors come earlier
      if (exp_divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

bool pairwise_coprime(const std::vector<Exponents>& gens) {
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!exp_coprime(gens[i], gens[j])) return false;
  return true;
}

Numerator hilbert_numerator(std::vector<Exponents> gens) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return num_one();
  // unit ideal: a generator with all exponents zero
  for (const Exponents& g : gens)
    if (total_degree(g) == 0) return Numerator{};
  if (pairwise_coprime(gens)) {
    Numerator n = num_one();
    for (const Exponents& g : gens) {
      Numerator shifted = num_sub_shift(n, n, total_degree(g));
      n = std::move(shifted);
    }
    return n;
  }
  // pivot: most frequent variable (lowest index breaks ties)
  size_t nv = gens.front().size();
  std::vector<int> freq(nv, 0);
  for (const Exponents& g : gens)
    for (size_t i = 0; i < nv; ++i)
      if (g[i] > 0) ++freq[i];
  size_t pivot = 0;
  for (size_t i = 1; i < nv; ++i)
    if (freq[i] > freq[pivot]) pivot = i;
  // I + (x_pivot) and (I : x_pivot)
  std::vector<Exponents> plus, colon;
  Exponents pv(nv, 0);
  pv[pivot] = 1;
  plus.push_back(pv);
  for (const Exponents& g : gens) {
    if (g[pivot] == 0) plus.push_back(g);
    Exponents q = g;
    if (q[pivot] > 0) --q[pivot];
    colon.push_back(q);
  }
  Numerator a = hilbert_numerator(std::move(plus));
  Numerator b = hilbert_numerator(std::move(colon));
  return num_add_shift(a, b, 1);
}

}  // namespace

std::vector<Int> hilbert_function_of_basis(const GroebnerBasis& gb, Int dmax) {
  if (dmax < 0) throw MathError("dmax must be nonnegative");
  std::vector<Exponents> lts;
  int n = gb.order.nvars();
  for (const Polynomial& g : gb.elements) lts.push_back(g.leading_monomial(gb.order));
  Numerator num = hilbert_numerator(std::move(lts));
  std::vector<Int> dims(static_cast<size_t>(dmax) + 1, 0);
  for (Int d = 0; d <= dmax; ++d) {
    mpz_class acc = 0;
    for (size_t e = 0; e < num.size() && static_cast<Int>(e) <= d; ++e) {
      if (num[e] == 0) continue;
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d - static_cast<Int>(e) + n - 1),
                   static_cast<unsigned long>(n - 1));
      acc += num[e] * binom;
    }
    if (!acc.fits_slong_p()) throw MathError("hilbert function value overflow");
    dims[static_cast<size_t>(d)] = acc.get_si();
  }
  return dims;
}

std::vector<Int> hilbert_function(const std::vector<Polynomial>& gens, Int dmax,
                                  const GroebnerConfig& cfg) {
  if (gens.empty()) throw MathError("hilbert_function: pass at least a zero polynomial to fix the ring");
  std::vector<Polynomial> nz = nonzero(gens);
  if (nz.empty()) {
    // zero ideal: the free ring
    int n = gens.front().nvars();
    std::vector<Int> dims(static_cast<size_t>(dmax) + 1, 0);
    for (Int d = 0; d <= dmax; ++d) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d + n - 1),
                   static_cast<unsigned long>(n - 1));
      dims[static_cast<size_t>(d)] = binom.get_si();
    }
    return dims;
  }
  for (const Polynomial& g : nz)
    if (!g.is_homogeneous())
      throw MathError("hilbert_function requires standard-homogeneous generators");
  GroebnerBasis gb = buchberger(nz, MonomialOrder::degrevlex(nz.front().nvars()), cfg);
  return hilbert_function_of_basis(gb, dmax);
}

std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens, const Grading& g,
                                           const GroebnerConfig& cfg) {
  std::vector<Polynomial> nz = nonzero(gens);
  if (nz.empty()) return {};
  std::vector<std::pair<Int, Polynomial>> staged;
  for (const Polynomial& p : nz) {
    auto d = p.weighted_degree(g);
    if (!d) throw MathError("minimal_generators: generator not homogeneous under the grading");
    staged.emplace_back(*d, p);
  }
  std::sort(staged.begin(), staged.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return Polynomial::cmp(a.second, b.second) < 0;
  });
  MonomialOrder ord = MonomialOrder::degrevlex(nz.front().nvars());
  std::vector<Polynomial> kept;
  GroebnerBasis kept_gb{ord, {}, true};
  for (auto& [deg, cand] : staged) {
    if (!kept.empty() && membership(cand, kept_gb)) continue;
    kept.push_back(cand);
    kept_gb = buchberger(kept, ord, cfg);
  }
  return kept;
}

}  // namespace tancone
