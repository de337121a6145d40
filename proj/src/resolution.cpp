#include "tancone/resolution.hpp"

#include <algorithm>
#include <set>

namespace tancone {

Int binomial(Int n, Int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

Int gss_betti(int r, Int a1, int i) {
  if (r < 2) throw MathError("gss_betti requires r >= 2");
  if (a1 < 1) throw MathError("gss_betti requires a1 >= 1");
  if (i < 1 || i > r - 1) throw MathError("gss_betti index out of range");
  Int b = (a1 - 1) % (r - 1) + 1;
  if (i <= r - b)
    return i * binomial(r - 1, i + 1) + (r - b - i + 1) * binomial(r - 1, i - 1);
  return i * binomial(r - 1, i + 1) + (i - r + b) * binomial(r - 1, i);
}

FreeModuleMap compose(const FreeModuleMap& A, const FreeModuleMap& B) {
  if (A.source_rank() != B.target_rank()) throw MathError("composing maps of mismatched ranks");
  FreeModuleMap C;
  C.target_degrees = A.target_degrees;
  C.source_degrees = B.source_degrees;
  int nv = 0;
  for (const auto& row : A.entries)
    for (const Polynomial& p : row)
      if (!p.is_zero()) nv = p.nvars();
  C.entries.assign(static_cast<size_t>(A.target_rank()),
                   std::vector<Polynomial>(static_cast<size_t>(B.source_rank()), Polynomial(nv)));
  for (int i = 0; i < A.target_rank(); ++i)
    for (int j = 0; j < B.source_rank(); ++j) {
      Polynomial acc(nv);
      for (int k = 0; k < A.source_rank(); ++k) {
        const Polynomial& a = A.entries[static_cast<size_t>(i)][static_cast<size_t>(k)];
        const Polynomial& b = B.entries[static_cast<size_t>(k)][static_cast<size_t>(j)];
        if (!a.is_zero() && !b.is_zero()) acc = acc + a * b;
      }
      C.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
    }
  return C;
}

bool is_zero_map(const FreeModuleMap& M) {
  for (const auto& row : M.entries)
    for (const Polynomial& p : row)
      if (!p.is_zero()) return false;
  return true;
}

bool has_no_unit_entries(const FreeModuleMap& M) {
  for (const auto& row : M.entries)
    for (const Polynomial& p : row)
      if (!p.is_zero() && p.total_degree() == 0) return false;
  return true;
}

namespace {

// ---- module engine -------------------------------------------------------
// Elements of S^rank as vectors of polynomials; order: monomial first under
// the ring order, then lower position wins.

struct ModElem {
  std::vector<Polynomial> c;

  bool is_zero() const {
    for (const Polynomial& p : c)
      if (!p.is_zero()) return false;
    return true;
  }
};

struct ModLT {
  int pos = -1;
  Exponents mono;
  Rational coeff;
};

ModLT mod_leading(const ModElem& v, const MonomialOrder& ord) {
  ModLT best;
  for (size_t p = 0; p < v.c.size(); ++p) {
    if (v.c[p].is_zero()) continue;
    Term t = v.c[p].leading_term(ord);
    if (best.pos < 0 || ord.greater(t.mono, best.mono)) {
      best.pos = static_cast<int>(p);
      best.mono = t.mono;
      best.coeff = t.coeff;
    }
    // equal monomials: keep the lower position (first seen)
  }
  if (best.pos < 0) throw MathError("leading term of zero module element");
  return best;
}

ModElem mod_sub_scaled(const ModElem& a, const ModElem& b, const Rational& c,
                       const Exponents& e) {
  ModElem r;
  r.c.reserve(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) r.c.push_back(a.c[i] - b.c[i].times_term(c, e));
  return r;
}

std::vector<Polynomial> cof_sub_scaled(const std::vector<Polynomial>& a,
                                       const std::vector<Polynomial>& b, const Rational& c,
                                       const Exponents& e) {
  std::vector<Polynomial> r;
  r.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i].times_term(c, e));
  return r;
}

Int mod_max_degree(const ModElem& v) {
  Int d = -1;
  for (const Polynomial& p : v.c) d = std::max(d, p.total_degree());
  return d;
}

struct ModuleBasis {
  std::vector<ModElem> elems;
  std::vector<ModLT> lts;
};

// Top-reduce h by the basis, updating the cofactor alongside when tracking.
// Returns true when h reduced to zero.
bool mod_reduce(ModElem& h, std::vector<Polynomial>* cof, const ModuleBasis& basis,
                const std::vector<std::vector<Polynomial>>* basis_cofs,
                const MonomialOrder& ord) {
  while (!h.is_zero()) {
    ModLT lt = mod_leading(h, ord);
    bool hit = false;
    for (size_t i = 0; i < basis.elems.size(); ++i) {
      const ModLT& bl = basis.lts[i];
      if (bl.pos != lt.pos || !exp_divides(bl.mono, lt.mono)) continue;
      Rational c = lt.coeff / bl.coeff;
      Exponents e = exp_div(lt.mono, bl.mono);
      h = mod_sub_scaled(h, basis.elems[i], c, e);
      if (cof) *cof = cof_sub_scaled(*cof, (*basis_cofs)[i], c, e);
      hit = true;
      break;
    }
    if (!hit) return false;  // leading term irreducible
  }
  return true;
}

struct ModPair {
  int i, j;
  Exponents lcm;
  Int deg;
};

struct ModPairLess {
  const MonomialOrder* ord;
  bool operator()(const ModPair& a, const ModPair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ord->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Module Buchberger. When `syzygies` is non-null, cofactors over the input
// generators are tracked and every zero reduction (S-pairs, and the inputs
// divided against the final basis) contributes a syzygy. No pair pruning:
// with all S-pairs processed, the collected syzygies generate the kernel
// (Schreyer).
ModuleBasis module_buchberger(const std::vector<ModElem>& gens, const MonomialOrder& ord,
                              const GroebnerConfig& cfg,
                              std::vector<std::vector<Polynomial>>* syzygies) {
  int nv = ord.nvars();
  size_t k = gens.size();
  ModuleBasis basis;
  std::vector<std::vector<Polynomial>> cofs;
  ModPairLess less{&ord};
  std::set<ModPair, ModPairLess> pairs(less);

  auto unit_cof = [&](size_t j) {
    std::vector<Polynomial> e(k, Polynomial(nv));
    e[j] = Polynomial::constant(nv, 1);
    return e;
  };

  auto push = [&](ModElem v, std::vector<Polynomial> cof) {
    if (mod_max_degree(v) > cfg.max_degree)
      throw BudgetExceeded("degree budget exceeded in module buchberger");
    ModLT lt = mod_leading(v, ord);
    int m = static_cast<int>(basis.elems.size());
    for (int i = 0; i < m; ++i) {
      if (basis.lts[static_cast<size_t>(i)].pos != lt.pos) continue;
      Exponents gam = exp_lcm(basis.lts[static_cast<size_t>(i)].mono, lt.mono);
      Int deg = total_degree(gam);
      pairs.insert(ModPair{i, m, std::move(gam), deg});
    }
    basis.elems.push_back(std::move(v));
    basis.lts.push_back(lt);
    cofs.push_back(std::move(cof));
  };

  for (size_t j = 0; j < k; ++j) {
    if (gens[j].is_zero()) continue;
    push(gens[j], syzygies ? unit_cof(j) : std::vector<Polynomial>());
  }

  long processed = 0;
  while (!pairs.empty()) {
    ModPair p = *pairs.begin();
    pairs.erase(pairs.begin());
    if (++processed > cfg.max_pairs)
      throw BudgetExceeded("pair budget exceeded in module buchberger");
    const ModLT& li = basis.lts[static_cast<size_t>(p.i)];
    const ModLT& lj = basis.lts[static_cast<size_t>(p.j)];
    Exponents ei = exp_div(p.lcm, li.mono), ej = exp_div(p.lcm, lj.mono);
    ModElem zero_elem;
    zero_elem.c.assign(basis.elems[static_cast<size_t>(p.i)].c.size(), Polynomial(nv));
    ModElem s = mod_sub_scaled(zero_elem, basis.elems[static_cast<size_t>(p.j)], 1 / lj.coeff, ej);
    s = mod_sub_scaled(s, basis.elems[static_cast<size_t>(p.i)], -1 / li.coeff, ei);
    std::vector<Polynomial> cof;
    if (syzygies) {
      std::vector<Polynomial> zero_cof(k, Polynomial(nv));
      cof = cof_sub_scaled(zero_cof, cofs[static_cast<size_t>(p.j)], 1 / lj.coeff, ej);
      cof = cof_sub_scaled(cof, cofs[static_cast<size_t>(p.i)], -1 / li.coeff, ei);
    }
    bool zero = mod_reduce(s, syzygies ? &cof : nullptr, basis, syzygies ? &cofs : nullptr, ord);
    if (zero) {
      if (syzygies) {
        bool nonzero_cof = false;
        for (const Polynomial& q : cof)
          if (!q.is_zero()) nonzero_cof = true;
        if (nonzero_cof) syzygies->push_back(std::move(cof));
      }
    } else {
      push(std::move(s), std::move(cof));
    }
  }

  if (syzygies) {
    // division records of the inputs against the final basis
    for (size_t j = 0; j < k; ++j) {
      if (gens[j].is_zero()) continue;
      ModElem h = gens[j];
      std::vector<Polynomial> cof = unit_cof(j);
      if (!mod_reduce(h, &cof, basis, &cofs, ord))
        throw OracleMismatch("input generator failed to reduce against its own module basis");
      bool nonzero_cof = false;
      for (const Polynomial& q : cof)
        if (!q.is_zero()) nonzero_cof = true;
      if (nonzero_cof) syzygies->push_back(std::move(cof));
    }
  }
  return basis;
}

bool module_member(const ModElem& v, const ModuleBasis& basis, const MonomialOrder& ord) {
  ModElem h = v;
  return mod_reduce(h, nullptr, basis, nullptr, ord);
}

// g-degree of a homogeneous module element under the given shifts; throws on
// inhomogeneity (would indicate a bug: the engine preserves homogeneity).
Int mod_degree(const ModElem& v, const Grading& g, const std::vector<Int>& shifts) {
  bool found = false;
  Int deg = 0;
  for (size_t p = 0; p < v.c.size(); ++p) {
    if (v.c[p].is_zero()) continue;
    auto d = v.c[p].weighted_degree(g);
    if (!d) throw OracleMismatch("inhomogeneous component in graded module element");
    Int total = *d + shifts[p];
    if (found && total != deg) throw OracleMismatch("module element not graded-homogeneous");
    deg = total;
    found = true;
  }
  if (!found) throw MathError("degree of zero module element");
  return deg;
}

int mod_elem_cmp(const ModElem& a, const ModElem& b) {
  for (size_t i = 0; i < a.c.size(); ++i) {
    int c = Polynomial::cmp(a.c[i], b.c[i]);
    if (c != 0) return c;
  }
  return 0;
}

// Graded Nakayama on module generators: sort by degree, keep an element iff
// it is not in the submodule of those already kept.
std::vector<ModElem> minimalize_module(std::vector<ModElem> gens, const Grading& g,
                                       const std::vector<Int>& shifts, const MonomialOrder& ord,
                                       const GroebnerConfig& cfg) {
  std::vector<std::pair<Int, ModElem>> staged;
  for (ModElem& v : gens) {
    if (v.is_zero()) continue;
    staged.emplace_back(mod_degree(v, g, shifts), std::move(v));
  }
  std::sort(staged.begin(), staged.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return mod_elem_cmp(a.second, b.second) < 0;
  });
  std::vector<ModElem> kept;
  ModuleBasis kept_basis;
  for (auto& [deg, cand] : staged) {
    if (!kept.empty() && module_member(cand, kept_basis, ord)) continue;
    kept.push_back(cand);
    kept_basis = module_buchberger(kept, ord, cfg, nullptr);
  }
  return kept;
}

std::vector<ModElem> columns_of(const FreeModuleMap& M, int nv) {
  std::vector<ModElem> cols;
  for (int j = 0; j < M.source_rank(); ++j) {
    ModElem v;
    v.c.reserve(static_cast<size_t>(M.target_rank()));
    for (int i = 0; i < M.target_rank(); ++i) {
      Polynomial p = M.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
      v.c.push_back(p.nvars() == nv ? p : Polynomial(nv));
    }
    cols.push_back(std::move(v));
  }
  return cols;
}

FreeModuleMap map_from_columns(const std::vector<ModElem>& cols,
                               const std::vector<Int>& target_degrees, const Grading& g,
                               int nv) {
  FreeModuleMap M;
  M.target_degrees = target_degrees;
  M.entries.assign(target_degrees.size(),
                   std::vector<Polynomial>(cols.size(), Polynomial(nv)));
  for (size_t j = 0; j < cols.size(); ++j) {
    M.source_degrees.push_back(mod_degree(cols[j], g, target_degrees));
    for (size_t i = 0; i < target_degrees.size(); ++i)
      M.entries[i][j] = cols[j].c[i];
  }
  return M;
}

}  // namespace

FreeModuleMap syzygies(const FreeModuleMap& M, const Grading& g, const GroebnerConfig& cfg) {
  int nv = g.nvars();
  MonomialOrder ord = MonomialOrder::degrevlex(nv);
  std::vector<ModElem> cols = columns_of(M, nv);
  std::vector<std::vector<Polynomial>> syz;
  module_buchberger(cols, ord, cfg, &syz);
  std::vector<ModElem> elems;
  for (auto& s : syz) elems.push_back(ModElem{std::move(s)});
  // canonical, deduplicated
  std::sort(elems.begin(), elems.end(),
            [](const ModElem& a, const ModElem& b) { return mod_elem_cmp(a, b) < 0; });
  elems.erase(std::unique(elems.begin(), elems.end(),
                          [](const ModElem& a, const ModElem& b) {
                            return mod_elem_cmp(a, b) == 0;
                          }),
              elems.end());
  return map_from_columns(elems, M.source_degrees, g, nv);
}

Resolution minimal_free_resolution_full(const std::vector<Polynomial>& I_gens, const Grading& g,
                                        const GroebnerConfig& cfg) {
  int nv = g.nvars();
  if (nv > 8) throw MathError("resolutions are capped at 8 variables");
  std::vector<Polynomial> gens;
  for (const Polynomial& p : I_gens)
    if (!p.is_zero()) gens.push_back(p);
  for (const Polynomial& p : gens) {
    if (p.nvars() != nv) throw RingMismatch("resolution: generator/grading ring mismatch");
    if (!p.weighted_degree(g))
      throw MathError("resolution requires generators homogeneous under the grading");
  }

  Resolution res;
  res.grading = g;
  res.betti.total = {1};
  res.betti.graded.push_back({{0, 1}});
  if (gens.empty()) return res;

  MonomialOrder ord = MonomialOrder::degrevlex(nv);

  // level 1: minimal generators of I, as a rank-1 module
  std::vector<ModElem> cur;
  for (const Polynomial& p : gens) cur.push_back(ModElem{{p}});
  std::vector<Int> shifts{0};
  cur = minimalize_module(std::move(cur), g, shifts, ord, cfg);

  while (!cur.empty()) {
    FreeModuleMap map = map_from_columns(cur, shifts, g, nv);
    res.maps.push_back(map);
    res.betti.total.push_back(static_cast<Int>(cur.size()));
    std::map<Int, Int> layer;
    for (Int d : map.source_degrees) ++layer[d];
    res.betti.graded.push_back(std::move(layer));

    if (static_cast<int>(res.maps.size()) > nv + 1)
      throw OracleMismatch("resolution exceeded the syzygy-theorem length bound");

    std::vector<std::vector<Polynomial>> syz;
    module_buchberger(cur, ord, cfg, &syz);
    std::vector<ModElem> next;
    for (auto& s : syz) next.push_back(ModElem{std::move(s)});
    shifts = map.source_degrees;
    cur = minimalize_module(std::move(next), g, shifts, ord, cfg);
  }

  // exactness spot-check and minimality
  for (size_t i = 0; i + 1 < res.maps.size(); ++i)
    if (!is_zero_map(compose(res.maps[i], res.maps[i + 1])))
      throw OracleMismatch("consecutive resolution maps do not compose to zero");
  for (const FreeModuleMap& m : res.maps)
    if (!has_no_unit_entries(m))
      throw OracleMismatch("unit entry survived in a minimal resolution map");
  return res;
}

BettiTable minimal_free_resolution(const std::vector<Polynomial>& I_gens, const Grading& g,
                                   const GroebnerConfig& cfg) {
  return minimal_free_resolution_full(I_gens, g, cfg).betti;
}

}  // namespace tancone
