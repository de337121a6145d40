#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tancone/semigroup.hpp"

using namespace tancone;

namespace {

NumericalSemigroup S(std::initializer_list<Int> g) {
  return NumericalSemigroup::from_generators(std::vector<Int>(g));
}

// independent membership oracle: plain table DP, no shortcuts
bool brute_member(Int n, const std::vector<Int>& gens) {
  if (n < 0) return false;
  std::vector<char> t(static_cast<size_t>(n) + 1, 0);
  t[0] = 1;
  for (Int v = 1; v <= n; ++v)
    for (Int g : gens)
      if (g <= v && t[static_cast<size_t>(v - g)]) {
        t[static_cast<size_t>(v)] = 1;
        break;
      }
  return t[static_cast<size_t>(n)] != 0;
}

// independent max-length oracle by full recursion over first-step choices
Int brute_ord(Int h, const std::vector<Int>& gens) {
  if (h == 0) return 0;
  Int best = -1;
  for (Int g : gens)
    if (g <= h) {
      Int sub = brute_ord(h - g, gens);
      if (sub >= 0) best = std::max(best, sub + 1);
    }
  return best;
}

std::vector<Int> random_gens(std::mt19937_64& rng, int count, Int maxval) {
  std::uniform_int_distribution<Int> dist(1, maxval);
  std::vector<Int> v;
  while (static_cast<int>(v.size()) < count) {
    Int g = dist(rng);
    if (std::find(v.begin(), v.end(), g) == v.end()) v.push_back(g);
  }
  return v;
}

}  // namespace

TEST_CASE("minimal generating systems") {
  CHECK(S({4, 6, 8}).generators() == std::vector<Int>{4, 6});
  CHECK(S({5}).generators() == std::vector<Int>{5});
  CHECK(S({5, 7, 9}).generators() == std::vector<Int>{5, 7, 9});
  CHECK(S({3, 5, 7}).shift(1).generators() == std::vector<Int>{4, 6});
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({}), MathError);
  CHECK_THROWS_AS(S({3, 0}), MathError);
  CHECK_THROWS_AS(S({-2, 3}), MathError);
}

TEST_CASE("membership") {
  CHECK(S({4, 5, 11}).contains(13));  // 13 = 4 + 4 + 5
  CHECK(!S({4, 5, 11}).contains(7));
  CHECK(S({4, 5, 11}).contains(0));
  CHECK(!S({5, 6, 9}).contains(13));  // 13 = 2e+3 is the Frobenius number for e=5
  CHECK(S({4, 6}).contains(10));
  CHECK(!S({4, 6}).contains(7));  // gcd 2 quick reject
  CHECK_THROWS_AS(S({2, 3}).contains(-1), MathError);

  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 40; ++iter) {
    auto gens = random_gens(rng, 3, 25);
    NumericalSemigroup H = NumericalSemigroup::from_generators(gens);
    for (Int n = 0; n <= 60; ++n) CHECK(H.contains(n) == brute_member(n, gens));
  }
}

TEST_CASE("apery sets") {
  CHECK(S({2, 3}).apery_set(2) == std::vector<Int>{0, 3});
  CHECK(S({5, 6, 9}).apery_set(5) == std::vector<Int>{0, 6, 12, 18, 9});
  CHECK(S({3, 4, 5}).apery_set(3) == std::vector<Int>{0, 4, 5});
  CHECK_THROWS_AS(S({4, 6}).apery_set(4), MathError);  // gcd != 1
  CHECK_THROWS_AS(S({4, 5}).apery_set(6), MathError);  // 6 not in <4,5>
}

TEST_CASE("frobenius numbers") {
  CHECK(S({4, 5}).frobenius_number() == 11);
  CHECK(S({5, 6, 9}).frobenius_number() == 13);
  CHECK(S({2, 3}).frobenius_number() == 1);
  CHECK(S({1}).frobenius_number() == -1);
  CHECK_THROWS_AS(S({4, 6}).frobenius_number(), MathError);
}

TEST_CASE("invariants") {
  auto inv = S({5, 6, 9}).invariants();
  CHECK(inv.mu == 3);
  CHECK(inv.width == 4);
  CHECK(inv.multiplicity == 5);
  auto inv1 = S({7}).invariants();
  CHECK(inv1.mu == 1);
  CHECK(inv1.width == 0);
  CHECK(inv1.multiplicity == 7);
  auto invb = S({12, 15, 20, 23}).invariants();
  CHECK(invb.mu == 4);
  CHECK(invb.width == 11);
  CHECK(invb.multiplicity == 12);
}

TEST_CASE("shifts") {
  NumericalSemigroup H = S({3, 5, 7});
  CHECK(H.shift(1) == S({4, 6}));
  CHECK(H.shift(2) == S({5, 7, 9}));
  CHECK(H.shift(0) == H);
  CHECK_THROWS_AS(H.shift(-1), MathError);
}

TEST_CASE("interval completion") {
  CHECK(S({3, 7}).interval_completion() == S({3, 4, 5}));
  CHECK(S({3, 5, 7}).interval_completion() == S({3, 4, 5}));
  CHECK(S({4, 5, 6}).interval_completion() == S({4, 5, 6}));
  // width(~H) = mu(~H) - 1 = min(a1 - 1, width)
  for (auto H : {S({7, 9, 11}), S({5, 11}), S({2, 9}), S({6, 7})}) {
    NumericalSemigroup T = H.interval_completion();
    CHECK(T.mu() == std::min(H.multiplicity() - 1, H.width()) + 1);
    CHECK(H.mu() <= T.mu());
  }
}

TEST_CASE("symmetry") {
  CHECK(S({5, 6, 9}).is_symmetric());
  CHECK(S({2, 3}).is_symmetric());
  CHECK(!S({3, 5, 7}).is_symmetric());
  CHECK(S({1}).is_symmetric());
  CHECK_THROWS_AS(S({4, 6}).is_symmetric(), MathError);
}

TEST_CASE("max factorization length") {
  CHECK(S({4, 5, 11}).max_factorization_length(11) == 1);
  CHECK(S({4, 5, 11}).max_factorization_length(20) == 5);
  CHECK(S({2, 3}).max_factorization_length(6) == 3);
  CHECK(S({4, 5, 11}).max_factorization_length(13) == 3);  // 4 + 4 + 5
  CHECK_THROWS_AS(S({4, 5, 11}).max_factorization_length(7), MathError);
  CHECK_THROWS_AS(S({2, 3}).max_factorization_length(0), MathError);

  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 25; ++iter) {
    auto gens = random_gens(rng, 2, 12);
    NumericalSemigroup H = NumericalSemigroup::from_generators(gens);
    for (Int h = 1; h <= 40; ++h) {
      Int expect = brute_ord(h, gens);
      if (expect >= 0) CHECK(H.max_factorization_length(h) == expect);
    }
  }
}

TEST_CASE("tangent Hilbert oracle") {
  CHECK(S({4, 5, 11}).tangent_hilbert_oracle(6) ==
        std::vector<Int>{1, 3, 3, 4, 4, 4, 4});
  CHECK(S({2, 3}).tangent_hilbert_oracle(4) == std::vector<Int>{1, 2, 2, 2, 2});
  CHECK(S({1}).tangent_hilbert_oracle(3) == std::vector<Int>{1, 1, 1, 1});
  CHECK_THROWS_AS(S({4, 6}).tangent_hilbert_oracle(3), MathError);

  // brute-force recount
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 10; ++iter) {
    auto gens = random_gens(rng, 3, 15);
    NumericalSemigroup H = NumericalSemigroup::from_generators(gens);
    if (H.gcd() != 1) continue;
    Int dmax = 8;
    std::vector<Int> counts(static_cast<size_t>(dmax) + 1, 0);
    for (Int h = 0; h <= dmax * H.generators().back(); ++h) {
      Int o = brute_ord(h, gens);
      if (o >= 0 && o <= dmax) ++counts[static_cast<size_t>(o)];
    }
    CHECK(H.tangent_hilbert_oracle(dmax) == counts);
  }
}

TEST_CASE("minimalization is idempotent and shifts stabilize") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 60; ++iter) {
    auto raw = random_gens(rng, 1 + static_cast<int>(rng() % 5), 40);
    NumericalSemigroup H = NumericalSemigroup::from_generators(raw);
    CHECK(NumericalSemigroup::from_generators(H.generators()) == H);

    Int ar = H.generators().back(), a1 = H.multiplicity();
    for (Int k = std::max<Int>(ar - 2 * a1 + 1, 0); k < ar - 2 * a1 + 6; ++k) {
      if (k < 0) continue;
      NumericalSemigroup Hk = H.shift(k);
      CHECK(Hk.mu() == H.mu());
      CHECK(Hk.width() == H.width());
    }
    for (Int k = 0; k <= 4; ++k) CHECK(H.shift(k).width() <= H.width());
  }
}

TEST_CASE("frobenius consistency properties") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 30) {
    auto gens = random_gens(rng, 2 + static_cast<int>(rng() % 3), 30);
    NumericalSemigroup H = NumericalSemigroup::from_generators(gens);
    if (H.gcd() != 1) continue;
    ++done;
    Int f = H.frobenius_number();
    for (Int s = f + 1; s <= f + H.multiplicity(); ++s) CHECK(H.contains(s));
    if (f >= 0) CHECK(!H.contains(f));
    auto ap = H.apery_set(H.multiplicity());
    CHECK(*std::max_element(ap.begin(), ap.end()) - H.multiplicity() == f);

    // oracle tail eventually constant at the multiplicity; stabilization is
    // bounded by the regularity, safely below 2 a_r at this scale
    Int dmax = 2 * H.generators().back() + 4;
    auto oracle = H.tangent_hilbert_oracle(dmax);
    for (size_t i = oracle.size() - static_cast<size_t>(H.width()) - 2; i < oracle.size(); ++i)
      CHECK(oracle[i] == H.multiplicity());
  }
}

TEST_CASE("text form") {
  CHECK(S({3, 5, 7}).str() == "<3,5,7>");
  CHECK(NumericalSemigroup::parse("<3,5,7>") == S({3, 5, 7}));
  CHECK(NumericalSemigroup::parse("4, 6, 8") == S({4, 6}));
  CHECK_THROWS_AS(NumericalSemigroup::parse("a,b"), ParseError);
  CHECK_THROWS_AS(NumericalSemigroup::parse(""), ParseError);
}
