#include "tancone/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace tancone {

int canonical_mono_cmp(const Exponents& a, const Exponents& b) {
  Int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

bool term_before(const Term& s, const Term& t) {
  return canonical_mono_cmp(s.mono, t.mono) > 0;  // descending
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw RingMismatch("polynomials from different rings");
}

}  // namespace

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  return monomial(nvars, Exponents(static_cast<size_t>(nvars), 0), c);
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw MathError("variable index out of range");
  Exponents e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(i)] = 1;
  return monomial(nvars, std::move(e));
}

Polynomial Polynomial::monomial(int nvars, Exponents e, Rational c) {
  if (static_cast<int>(e.size()) != nvars) throw RingMismatch("exponent vector length mismatch");
  for (int x : e)
    if (x < 0) throw MathError("negative exponent");
  Polynomial p(nvars);
  c.canonicalize();  // GMP comparisons assume canonical form
  if (c != 0) p.terms_.push_back(Term{std::move(c), std::move(e)});
  return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
  for (Term& t : terms) {
    if (static_cast<int>(t.mono.size()) != nvars)
      throw RingMismatch("exponent vector length mismatch");
    for (int x : t.mono)
      if (x < 0) throw MathError("negative exponent");
    t.coeff.canonicalize();
  }
  std::sort(terms.begin(), terms.end(), term_before);
  Polynomial p(nvars);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  }
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  Polynomial r(nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == o.terms_.size()) c = 1;
    else c = canonical_mono_cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back(Term{std::move(s), terms_[i].mono});
      ++i, ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const Rational& c, const Exponents& e) const {
  if (static_cast<int>(e.size()) != nvars_) throw RingMismatch("term from different ring");
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.coeff * c, exp_mul(t.mono, e)});
  // multiplying by a fixed monomial preserves the canonical sort
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.coeff * c, t.mono});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  Polynomial acc(nvars_);
  for (const Term& t : o.terms_) acc = acc + times_term(t.coeff, t.mono);
  return acc;
}

int Polynomial::cmp(const Polynomial& a, const Polynomial& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = canonical_mono_cmp(a.terms_[i].mono, b.terms_[i].mono);
    if (c != 0) return c;
    if (a.terms_[i].coeff != b.terms_[i].coeff)
      return a.terms_[i].coeff > b.terms_[i].coeff ? 1 : -1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() > b.terms_.size() ? 1 : -1;
  return 0;
}

Term Polynomial::leading_term(const MonomialOrder& ord) const {
  if (is_zero()) throw MathError("leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (size_t i = 1; i < terms_.size(); ++i)
    if (ord.greater(terms_[i].mono, best->mono)) best = &terms_[i];
  return *best;
}

const Exponents& Polynomial::leading_monomial(const MonomialOrder& ord) const {
  if (is_zero()) throw MathError("leading monomial of zero polynomial");
  const Term* best = &terms_[0];
  for (size_t i = 1; i < terms_.size(); ++i)
    if (ord.greater(terms_[i].mono, best->mono)) best = &terms_[i];
  return best->mono;
}

Int Polynomial::total_degree() const {
  if (is_zero()) return -1;
  // canonical sort is degree-first, so the first term has maximal degree
  return tancone::total_degree(terms_.front().mono);
}

bool Polynomial::is_homogeneous() const {
  if (is_zero()) return true;
  return tancone::total_degree(terms_.front().mono) ==
         tancone::total_degree(terms_.back().mono);
}

std::pair<Polynomial, Int> Polynomial::initial_form() const {
  if (is_zero()) throw MathError("initial form of zero polynomial");
  Int nu = tancone::total_degree(terms_.back().mono);
  Polynomial r(nvars_);
  for (const Term& t : terms_)
    if (tancone::total_degree(t.mono) == nu) r.terms_.push_back(t);
  // terms of equal degree keep their relative canonical order
  return {std::move(r), nu};
}

std::optional<Int> Polynomial::weighted_degree(const Grading& g) const {
  if (is_zero()) throw MathError("weighted degree of zero polynomial");
  Int d = g.degree(terms_[0].mono);
  for (size_t i = 1; i < terms_.size(); ++i)
    if (g.degree(terms_[i].mono) != d) return std::nullopt;
  return d;
}

bool Polynomial::involves_variable(int i) const {
  for (const Term& t : terms_)
    if (t.mono[static_cast<size_t>(i)] > 0) return true;
  return false;
}

Polynomial Polynomial::homogenize(int svar) const {
  if (involves_variable(svar)) throw MathError("homogenizing variable occurs in polynomial");
  Int top = total_degree();
  std::vector<Term> ts = terms_;
  for (Term& t : ts)
    t.mono[static_cast<size_t>(svar)] = static_cast<int>(top - tancone::total_degree(t.mono));
  return from_terms(nvars_, std::move(ts));
}

Polynomial Polynomial::dehomogenize(int svar) const {
  std::vector<Term> ts = terms_;
  for (Term& t : ts) t.mono[static_cast<size_t>(svar)] = 0;
  return from_terms(nvars_, std::move(ts));
}

std::pair<Polynomial, int> Polynomial::divide_out_variable(int i) const {
  if (is_zero()) return {*this, 0};
  int m = terms_[0].mono[static_cast<size_t>(i)];
  for (const Term& t : terms_) m = std::min(m, t.mono[static_cast<size_t>(i)]);
  if (m == 0) return {*this, 0};
  std::vector<Term> ts = terms_;
  for (Term& t : ts) t.mono[static_cast<size_t>(i)] -= m;
  return {from_terms(nvars_, std::move(ts)), m};
}

Polynomial Polynomial::map_variables(int new_nvars, const std::vector<int>& embed) const {
  if (static_cast<int>(embed.size()) != nvars_) throw RingMismatch("embedding length mismatch");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) {
    Exponents e(static_cast<size_t>(new_nvars), 0);
    for (int v = 0; v < nvars_; ++v) {
      int img = embed[static_cast<size_t>(v)];
      if (t.mono[static_cast<size_t>(v)] != 0) {
        if (img < 0 || img >= new_nvars)
          throw MathError("variable with nonzero exponent maps out of ring");
        e[static_cast<size_t>(img)] += t.mono[static_cast<size_t>(v)];
      }
    }
    ts.push_back(Term{t.coeff, std::move(e)});
  }
  return from_terms(new_nvars, std::move(ts));
}

std::string Polynomial::str(const Ring& ring) const {
  if (ring.size() != nvars_) throw RingMismatch("printing with wrong ring");
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool has_vars = tancone::total_degree(t.mono) > 0;
    if (c != 1 || !has_vars) {
      os << c.get_str();
      if (has_vars) os << "*";
    }
    bool firstv = true;
    for (int i = 0; i < nvars_; ++i) {
      int e = t.mono[static_cast<size_t>(i)];
      if (e == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << ring.name(i);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

struct Scanner {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

mpz_class parse_integer(Scanner& sc) {
  sc.skip_ws();
  std::string digits;
  while (sc.pos < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.pos])))
    digits += sc.s[sc.pos++];
  if (digits.empty()) throw ParseError("expected integer at position " + std::to_string(sc.pos));
  return mpz_class(digits);
}

int match_variable(Scanner& sc, const Ring& ring) {
  sc.skip_ws();
  int found = -1;
  size_t best = 0;
  for (int i = 0; i < ring.size(); ++i) {
    const std::string& nm = ring.name(i);
    if (nm.size() > best && sc.s.compare(sc.pos, nm.size(), nm) == 0) {
      found = i;
      best = nm.size();
    }
  }
  if (found >= 0) sc.pos += best;
  return found;
}

}  // namespace

Polynomial Polynomial::parse(const Ring& ring, const std::string& text) {
  Scanner sc{text};
  std::vector<Term> terms;
  bool expect_term = true;
  int sign = 1;
  while (!sc.eof()) {
    if (sc.accept('+')) {
      expect_term = true;
      continue;
    }
    if (sc.accept('-')) {
      sign = -sign;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw ParseError("expected + or - between terms: " + text);
    // one term: product of integer/rational coefficients and powers
    Rational coeff(sign);
    Exponents mono(static_cast<size_t>(ring.size()), 0);
    bool any = false;
    for (;;) {
      char c = sc.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mpz_class num = parse_integer(sc);
        if (sc.accept('/')) {
          mpz_class den = parse_integer(sc);
          if (den == 0) throw ParseError("zero denominator");
          coeff *= Rational(num, den);
        } else {
          coeff *= Rational(num);
        }
        any = true;
      } else {
        int v = match_variable(sc, ring);
        if (v < 0) break;
        int e = 1;
        if (sc.accept('^')) {
          mpz_class ez = parse_integer(sc);
          if (ez < 0 || ez > 1000000) throw ParseError("exponent out of range");
          e = static_cast<int>(ez.get_si());
        }
        mono[static_cast<size_t>(v)] += e;
        any = true;
      }
      sc.accept('*');
    }
    if (!any) throw ParseError("unparsable input near position " + std::to_string(sc.pos) +
                               " in: " + text);
    coeff.canonicalize();
    terms.push_back(Term{std::move(coeff), std::move(mono)});
    sign = 1;
    expect_term = false;
  }
  if (expect_term && !terms.empty()) throw ParseError("dangling sign in: " + text);
  return from_terms(ring.size(), std::move(terms));
}

}  // namespace tancone
