#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "tancone/groebner.hpp"

using namespace tancone;

namespace {

Polynomial P(const Ring& ring, const std::string& s) { return Polynomial::parse(ring, s); }

// brute S-pair reduction sweep: independent confirmation that a set is a GB
bool all_spairs_reduce(const std::vector<Polynomial>& G, const MonomialOrder& ord) {
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) {
      Term li = G[i].leading_term(ord), lj = G[j].leading_term(ord);
      Exponents lcm = exp_lcm(li.mono, lj.mono);
      Polynomial s = G[i].times_term(1 / li.coeff, exp_div(lcm, li.mono)) -
                     G[j].times_term(1 / lj.coeff, exp_div(lcm, lj.mono));
      if (!normal_form(s, G, ord).is_zero()) return false;
    }
  return true;
}

// substitution x_i -> t^{w_i}; zero iff the polynomial is a relation of the
// monomial curve
bool vanishes(const Polynomial& f, const std::vector<Int>& w) {
  std::map<Int, Rational> img;
  for (const Term& t : f.terms()) {
    Int d = 0;
    for (size_t i = 0; i < w.size(); ++i) d += w[i] * t.mono[i];
    img[d] += t.coeff;
  }
  for (auto& [d, c] : img)
    if (c != 0) return false;
  return true;
}

// dense linear-algebra dimension of (S/I)_d over QQ: rank of the span of
// {m * g : g in gens, deg(m g) = d} inside the degree-d monomial basis
Int dim_by_linear_algebra(const std::vector<Polynomial>& gens, int nvars, Int d) {
  std::vector<Exponents> monos;
  Exponents cur(static_cast<size_t>(nvars), 0);
  std::function<void(int, Int)> gen = [&](int var, Int left) {
    if (var == nvars - 1) {
      cur[static_cast<size_t>(var)] = static_cast<int>(left);
      monos.push_back(cur);
      return;
    }
    for (Int e = 0; e <= left; ++e) {
      cur[static_cast<size_t>(var)] = static_cast<int>(e);
      gen(var + 1, left - e);
    }
  };
  gen(0, d);
  std::map<Exponents, size_t> index;
  for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;

  std::vector<std::vector<Rational>> rows;
  for (const Polynomial& g : gens) {
    Int gd = g.total_degree();
    if (!g.is_homogeneous() || gd > d) continue;
    std::vector<Exponents> mults;
    Exponents m(static_cast<size_t>(nvars), 0);
    std::function<void(int, Int)> gen2 = [&](int var, Int left) {
      if (var == nvars - 1) {
        m[static_cast<size_t>(var)] = static_cast<int>(left);
        mults.push_back(m);
        return;
      }
      for (Int e = 0; e <= left; ++e) {
        m[static_cast<size_t>(var)] = static_cast<int>(e);
        gen2(var + 1, left - e);
      }
    };
    gen2(0, d - gd);
    for (const Exponents& mm : mults) {
      std::vector<Rational> row(monos.size(), Rational(0));
      for (const Term& t : g.terms()) row[index.at(exp_mul(t.mono, mm))] = t.coeff;
      rows.push_back(std::move(row));
    }
  }
  // Gaussian elimination
  size_t rank = 0;
  for (size_t col = 0; col < monos.size() && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (size_t c = col; c < monos.size(); ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return static_cast<Int>(monos.size()) - static_cast<Int>(rank);
}

}  // namespace

TEST_CASE("normal form basics") {
  Ring xy({"x", "y"});
  MonomialOrder lex = MonomialOrder::lex(2);
  Polynomial g = P(xy, "x^2 - y");
  CHECK(normal_form(g, {g}, lex).is_zero());
  CHECK(normal_form(P(xy, "x^2*y"), {P(xy, "x*y - 1")}, lex) == P(xy, "x"));
}

TEST_CASE("buchberger on a single element and a classic pair") {
  Ring xy({"x", "y"});
  MonomialOrder drl = MonomialOrder::degrevlex(2);
  GroebnerBasis gb = buchberger({P(xy, "2*x^3 - 2*y^2")}, drl);
  CHECK(gb.elements.size() == 1);
  CHECK(gb.elements[0] == P(xy, "x^3 - y^2"));
  CHECK(gb.reduced);

  // classic: twisted-cubic style
  Ring txy({"t", "x", "y"});
  std::vector<Polynomial> elim = eliminate({P(txy, "t^2 - x"), P(txy, "t^3 - y")}, {0});
  REQUIRE(elim.size() == 1);
  Polynomial rel = elim[0].map_variables(2, {-1, 0, 1});
  CHECK((rel == P(xy, "x^3 - y^2") || rel == P(xy, "y^2 - x^3")));
  CHECK(vanishes(elim[0], {1, 2, 3}));
}

TEST_CASE("elimination of t from a trivial ideal") {
  Ring tx({"t", "x"});
  CHECK(eliminate({P(tx, "t - x")}, {0}).empty());
}

TEST_CASE("membership examples") {
  Ring xyz({"x", "y", "z"});
  std::vector<Polynomial> I = {P(xyz, "x^4 - y*z"), P(xyz, "y^3 - x*z"),
                               P(xyz, "z^2 - x^3*y^2")};
  MonomialOrder drl = MonomialOrder::degrevlex(3);
  CHECK(membership(P(xyz, "x^5 - y^4"), I, drl));
  CHECK(!membership(Polynomial::constant(1, 1), {Polynomial::variable(1, 0)},
                    MonomialOrder::degrevlex(1)));
  CHECK(!membership(P(xyz, "x^3 - y^2"), I, drl));
}

TEST_CASE("the homogenized Shibuta basis for a = 7 is already a Groebner basis") {
  // a = 3k+1 with k = 2: G = {g^h, p^h, f_0^h, f_1^h, f_2^h, f_{k+1}} in
  // K[s,x,y,z] under pure lex s > x > y > z
  Ring r({"s", "x", "y", "z"});
  std::vector<Polynomial> G = {
      P(r, "s*x*z - y^3"),            // g^h
      P(r, "z^3 - s^2*x^5*y^2"),      // p^h: z^3, x^5 y^2 padded from deg 7 to... see below
      P(r, "s^3*y*z^2 - x^6"),        // f_0^h
      P(r, "s^2*y^4*z - x^7"),        // f_1^h
      P(r, "s*y^7 - x^8"),            // f_2^h
      P(r, "y^10 - s*x^9*z"),         // f_{k+1} = y^{3k+4} - x^{3k+3} z
  };
  // fix p^h: p = z^3 - x^5 y^2 has degrees 3 and 7, so p^h = s^4 z^3 - x^5 y^2
  G[1] = P(r, "s^4*z^3 - x^5*y^2");
  MonomialOrder lex = MonomialOrder::lex(4);
  CHECK(all_spairs_reduce(G, lex));
  // buchberger conservatively re-derives the same ideal with the same
  // leading-term ideal
  GroebnerBasis gb = buchberger(G, lex);
  CHECK(all_spairs_reduce(gb.elements, lex));
  CHECK(ideal_equal(G, gb.elements));
}

TEST_CASE("eliminate t reproduces the <4,5,11> relations") {
  Ring r({"t", "x", "y", "z"});
  std::vector<Polynomial> elim =
      eliminate({P(r, "x - t^4"), P(r, "y - t^5"), P(r, "z - t^11")}, {0});
  for (const Polynomial& g : elim) CHECK(vanishes(g, {1, 4, 5, 11}));
  Ring xyz({"x", "y", "z"});
  std::vector<Polynomial> expected = {P(xyz, "x^4 - y*z"), P(xyz, "y^3 - x*z"),
                                      P(xyz, "z^2 - x^3*y^2")};
  std::vector<Polynomial> contracted;
  for (const Polynomial& g : elim) contracted.push_back(g.map_variables(3, {-1, 0, 1, 2}));
  CHECK(ideal_equal(contracted, expected));
}

TEST_CASE("saturation") {
  Ring sx({"s", "x"});
  std::vector<Polynomial> sat = saturate_by_variable({P(sx, "s*x")}, 0);
  REQUIRE(sat.size() == 1);
  CHECK(sat[0] == P(sx, "x"));

  bool changed = true;
  std::vector<Polynomial> I = {P(sx, "x^2 - s*x")};  // x(x - s)
  std::vector<Polynomial> unchanged = saturate_by_variable(I, 1, {}, &changed);
  CHECK(changed);
  CHECK(ideal_equal(unchanged, {P(sx, "x - s")}));

  // homogeneous two-element example: run the loop, confirm the fixpoint via
  // the independent quotient route
  Ring sxyz({"s", "x", "y", "z"});
  std::vector<Polynomial> J = {P(sxyz, "s*x*z - y^3"), P(sxyz, "s^3*y*z^2 - x^6")};
  bool jchanged = true;
  std::vector<Polynomial> Jsat = saturate_by_variable(J, 0, {}, &jchanged);
  CHECK(ideal_equal(ideal_quotient(Jsat, Polynomial::variable(4, 0)), Jsat));
  if (!jchanged) CHECK(ideal_equal(J, Jsat));
}

TEST_CASE("ideal quotient") {
  Ring xy({"x", "y"});
  std::vector<Polynomial> I = {P(xy, "x*y")};
  CHECK(ideal_equal(ideal_quotient(I, Polynomial::variable(2, 0)), {P(xy, "y")}));
  CHECK(ideal_equal(ideal_quotient(I, Polynomial::constant(2, 1)), I));
  Ring xyz({"x", "y", "z"});
  // (I : z) for I = (yz, xz, z^2, y^4) is (x, y, z)
  std::vector<Polynomial> star = {P(xyz, "y*z"), P(xyz, "x*z"), P(xyz, "z^2"), P(xyz, "y^4")};
  CHECK(ideal_equal(ideal_quotient(star, Polynomial::variable(3, 2)),
                    {P(xyz, "x"), P(xyz, "y"), P(xyz, "z")}));
}

TEST_CASE("hilbert functions") {
  Ring xyz({"x", "y", "z"});
  std::vector<Polynomial> J = {P(xyz, "y*z"), P(xyz, "x*z"), P(xyz, "z^2"), P(xyz, "y^4")};
  std::vector<Int> hf = hilbert_function(J, 8);
  CHECK(hf == std::vector<Int>{1, 3, 3, 4, 4, 4, 4, 4, 4});

  CHECK(hilbert_function({Polynomial::zero(2)}, 5) == std::vector<Int>{1, 2, 3, 4, 5, 6});

  Ring xy({"x", "y"});
  CHECK(hilbert_function({P(xy, "y^2")}, 5) == std::vector<Int>{1, 2, 2, 2, 2, 2});

  CHECK_THROWS_AS(hilbert_function({P(xy, "x + y^2")}, 3), MathError);

  // independent linear-algebra recount on inhomogeneous-free examples
  for (Int d = 0; d <= 6; ++d) {
    CHECK(hilbert_function(J, 6)[static_cast<size_t>(d)] == dim_by_linear_algebra(J, 3, d));
  }
  std::vector<Polynomial> I2 = {P(xyz, "x*y - z^2"), P(xyz, "x^2*z")};
  std::vector<Int> hf2 = hilbert_function(I2, 7);
  for (Int d = 0; d <= 7; ++d)
    CHECK(hf2[static_cast<size_t>(d)] == dim_by_linear_algebra(I2, 3, d));
}

TEST_CASE("minimal generators by graded Nakayama") {
  Ring xy({"x", "y"});
  std::vector<Polynomial> min =
      minimal_generators({P(xy, "x"), P(xy, "x^2")}, Grading::standard(2));
  REQUIRE(min.size() == 1);
  CHECK(min[0] == P(xy, "x"));

  // count is order-independent
  Ring xyz({"x", "y", "z"});
  std::vector<Polynomial> gens = {P(xyz, "y*z"), P(xyz, "x*z"),     P(xyz, "z^2"),
                                  P(xyz, "y^4"), P(xyz, "x*y*z"),   P(xyz, "z^3 - x*y*z"),
                                  P(xyz, "y^5"), P(xyz, "x^2*z logical".substr(0, 0) + "")};
  gens.pop_back();
  gens.push_back(P(xyz, "x^2*z"));
  std::mt19937_64 rng(31);
  size_t expect = minimal_generators(gens, Grading::standard(3)).size();
  CHECK(expect == 4);
  for (int iter = 0; iter < 10; ++iter) {
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(minimal_generators(gens, Grading::standard(3)).size() == expect);
  }
  CHECK_THROWS_AS(minimal_generators({P(xy, "x + y^2")}, Grading::standard(2)), MathError);
}

TEST_CASE("reduced GB uniqueness under generator shuffles") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> e(0, 3), n(2, 4);
  for (int iter = 0; iter < 25; ++iter) {
    int gens_count = n(rng);
    std::vector<Polynomial> gens;
    for (int i = 0; i < gens_count; ++i) {
      Exponents a(3), b(3);
      for (int v = 0; v < 3; ++v) a[static_cast<size_t>(v)] = e(rng);
      for (int v = 0; v < 3; ++v) b[static_cast<size_t>(v)] = e(rng);
      if (a == b) continue;
      gens.push_back(Polynomial::monomial(3, a) - Polynomial::monomial(3, b));
    }
    if (gens.empty()) continue;
    MonomialOrder ord = MonomialOrder::degrevlex(3);
    GroebnerBasis first = buchberger(gens, ord);
    for (int s = 0; s < 3; ++s) {
      std::shuffle(gens.begin(), gens.end(), rng);
      GroebnerBasis again = buchberger(gens, ord);
      REQUIRE(again.elements.size() == first.elements.size());
      for (size_t i = 0; i < first.elements.size(); ++i)
        CHECK(again.elements[i] == first.elements[i]);
    }
    // chain criterion must not change the answer
    GroebnerConfig no_chain;
    no_chain.chain_criterion = false;
    GroebnerBasis plain = buchberger(gens, ord, no_chain);
    REQUIRE(plain.elements.size() == first.elements.size());
    for (size_t i = 0; i < first.elements.size(); ++i)
      CHECK(plain.elements[i] == first.elements[i]);
  }
}

TEST_CASE("normal-form membership agrees with the substitution oracle on toric ideals") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<Int> gdist(3, 20);
  int done = 0;
  while (done < 8) {
    std::vector<Int> w = {gdist(rng), gdist(rng), gdist(rng)};
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    if (w.size() < 3) continue;
    ++done;
    // parametrization ideal, eliminated
    Ring txyz({"t", "x", "y", "z"});
    std::vector<Polynomial> param;
    for (int i = 0; i < 3; ++i) {
      Exponents tp(4, 0);
      tp[0] = static_cast<int>(w[static_cast<size_t>(i)]);
      param.push_back(Polynomial::variable(4, i + 1) - Polynomial::monomial(4, tp));
    }
    std::vector<Polynomial> I;
    for (const Polynomial& g : eliminate(param, {0}))
      I.push_back(g.map_variables(3, {-1, 0, 1, 2}));
    GroebnerBasis gb = buchberger(I, MonomialOrder::degrevlex(3));
    // random H-homogeneous binomials and random ideal combinations
    std::uniform_int_distribution<int> e(0, 5);
    for (int probe = 0; probe < 30; ++probe) {
      Exponents a(3), b(3);
      for (int v = 0; v < 3; ++v) a[static_cast<size_t>(v)] = e(rng);
      for (int v = 0; v < 3; ++v) b[static_cast<size_t>(v)] = e(rng);
      Polynomial f = Polynomial::monomial(3, a) - Polynomial::monomial(3, b);
      if (f.is_zero()) continue;
      CHECK(membership(f, gb) == vanishes(f, w));
    }
  }
}

TEST_CASE("budgets raise distinct errors") {
  Ring xyz({"x", "y", "z"});
  GroebnerConfig tiny;
  tiny.max_pairs = 1;
  std::vector<Polynomial> I = {P(xyz, "x^4 - y*z"), P(xyz, "y^3 - x*z"),
                               P(xyz, "z^2 - x^3*y^2"), P(xyz, "x*y^2 - z^3")};
  CHECK_THROWS_AS(buchberger(I, MonomialOrder::lex(3), tiny), BudgetExceeded);
  GroebnerConfig small_deg;
  small_deg.max_degree = 2;
  CHECK_THROWS_AS(buchberger(I, MonomialOrder::degrevlex(3), small_deg), BudgetExceeded);
}
