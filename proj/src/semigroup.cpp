#include "tancone/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tancone {

namespace {

// is `target` a nonnegative combination of `gens`? (gens sorted ascending)
bool representable(Int target, const std::vector<Int>& gens) {
  if (target == 0) return true;
  if (gens.empty()) return false;
  std::vector<char> table(static_cast<size_t>(target) + 1, 0);
  table[0] = 1;
  for (Int n = gens.front(); n <= target; ++n) {
    for (Int g : gens) {
      if (g > n) break;
      if (table[static_cast<size_t>(n - g)]) {
        table[static_cast<size_t>(n)] = 1;
        break;
      }
    }
  }
  return table[static_cast<size_t>(target)] != 0;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<Int> gens, Int g)
    : gens_(std::move(gens)), gcd_(g), memo_(std::make_shared<Memo>()) {}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<Int>& raw) {
  if (raw.empty()) throw MathError("semigroup needs at least one generator");
  for (Int g : raw)
    if (g <= 0) throw MathError("semigroup generators must be positive");
  std::vector<Int> sorted = raw;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // a generator is redundant iff it lies in the semigroup of the smaller kept
  // ones; anything a dropped generator could contribute, its factors already do
  std::vector<Int> kept;
  for (Int g : sorted) {
    if (!representable(g, kept)) kept.push_back(g);
  }
  Int g = 0;
  for (Int x : kept) g = std::gcd(g, x);
  return NumericalSemigroup(std::move(kept), g);
}

void NumericalSemigroup::ensure_tables(Int bound) const {
  if (bound < 0) bound = 0;
  std::lock_guard<std::mutex> lock(memo_->mu);
  std::vector<char>& member = memo_->member;
  std::vector<Int>& ord = memo_->ord;
  if (static_cast<Int>(member.size()) > bound) return;
  size_t old = member.size();
  size_t want = static_cast<size_t>(bound) + 1;
  want = std::max(want, std::max<size_t>(2 * old, 256));
  member.resize(want, 0);
  ord.resize(want, -1);
  if (old == 0) {
    member[0] = 1;
    ord[0] = 0;
    old = 1;
  }
  for (size_t n = old; n < want; ++n) {
    Int best = -1;
    for (Int g : gens_) {
      if (g > static_cast<Int>(n)) break;
      size_t prev = n - static_cast<size_t>(g);
      if (member[prev] && ord[prev] + 1 > best) best = ord[prev] + 1;
    }
    if (best >= 0) {
      member[n] = 1;
      ord[n] = best;
    }
  }
}

bool NumericalSemigroup::member_raw(Int n) const {
  ensure_tables(n);
  std::lock_guard<std::mutex> lock(memo_->mu);
  return memo_->member[static_cast<size_t>(n)] != 0;
}

bool NumericalSemigroup::contains(Int n) const {
  if (n < 0) throw MathError("membership query on negative integer");
  if (n == 0) return true;
  if (gcd_ > 1 && n % gcd_ != 0) return false;
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    if (memo_->frobenius > -2 && n > memo_->frobenius) return true;
    if (n < static_cast<Int>(memo_->member.size()))
      return memo_->member[static_cast<size_t>(n)] != 0;
  }
  // for large queries on gcd-1 semigroups, paying for the Frobenius number
  // once beats growing the table
  if (gcd_ == 1 && n >= 1024) {
    Int f = frobenius_number();
    if (n > f) return true;
  }
  return member_raw(n);
}

std::vector<Int> NumericalSemigroup::apery_set(Int m) const {
  if (gcd_ != 1) throw MathError("apery set requires gcd 1");
  if (m <= 0) throw MathError("apery set requires positive m");
  if (!member_raw(m)) throw MathError("apery set requires m in H");
  std::vector<Int> least(static_cast<size_t>(m), -1);
  Int found = 0;
  Int bound = std::max<Int>(2 * m, 256);
  while (found < m) {
    ensure_tables(bound);
    found = 0;
    std::fill(least.begin(), least.end(), -1);
    std::lock_guard<std::mutex> lock(memo_->mu);
    for (Int n = 0; n <= bound; ++n) {
      if (!memo_->member[static_cast<size_t>(n)]) continue;
      Int r = n % m;
      if (least[static_cast<size_t>(r)] < 0) {
        least[static_cast<size_t>(r)] = n;
        if (++found == m) break;
      }
    }
    bound *= 2;
  }
  return least;
}

Int NumericalSemigroup::frobenius_number() const {
  if (gcd_ != 1) throw MathError("Frobenius number requires gcd 1");
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    if (memo_->frobenius > -2) return memo_->frobenius;
  }
  Int f;
  if (gens_.front() == 1) {
    f = -1;  // <1> has no gaps
  } else {
    std::vector<Int> ap = apery_set(gens_.front());
    f = *std::max_element(ap.begin(), ap.end()) - gens_.front();
  }
  std::lock_guard<std::mutex> lock(memo_->mu);
  memo_->frobenius = f;
  return f;
}

NumericalSemigroup NumericalSemigroup::shift(Int k) const {
  if (k < 0) throw MathError("shift requires k >= 0");
  std::vector<Int> shifted;
  shifted.reserve(gens_.size());
  for (Int g : gens_) shifted.push_back(g + k);
  return from_generators(shifted);
}

NumericalSemigroup NumericalSemigroup::interval_completion() const {
  std::vector<Int> interval;
  for (Int v = gens_.front(); v <= gens_.back(); ++v) interval.push_back(v);
  NumericalSemigroup tilde = from_generators(interval);
  Int expect = std::min(gens_.front() - 1, width()) + 1;
  if (tilde.mu() != expect || mu() > tilde.mu())
    throw OracleMismatch("interval completion failed its generator-count checks for " + str());
  return tilde;
}

bool NumericalSemigroup::is_symmetric() const {
  Int f = frobenius_number();
  if (f < 0) return true;  // <1>: no gaps, vacuously symmetric
  ensure_tables(f);
  std::lock_guard<std::mutex> lock(memo_->mu);
  for (Int s = 0; s <= f; ++s) {
    bool a = memo_->member[static_cast<size_t>(s)] != 0;
    bool b = memo_->member[static_cast<size_t>(f - s)] != 0;
    if (a == b) return false;
  }
  return true;
}

Int NumericalSemigroup::max_factorization_length(Int h) const {
  if (h <= 0) throw MathError("factorization length requires h > 0");
  ensure_tables(h);
  std::lock_guard<std::mutex> lock(memo_->mu);
  Int o = memo_->ord[static_cast<size_t>(h)];
  if (o < 0) throw MathError(std::to_string(h) + " is not in " + str());
  return o;
}

std::vector<Int> NumericalSemigroup::tangent_hilbert_oracle(Int dmax) const {
  if (gcd_ != 1) throw MathError("tangent Hilbert oracle requires gcd 1");
  if (dmax < 0) throw MathError("dmax must be nonnegative");
  Int bound = checked_mul(dmax, gens_.back());
  ensure_tables(bound);
  std::vector<Int> counts(static_cast<size_t>(dmax) + 1, 0);
  std::lock_guard<std::mutex> lock(memo_->mu);
  for (Int h = 0; h <= bound; ++h) {
    Int o = memo_->ord[static_cast<size_t>(h)];
    if (o >= 0 && o <= dmax) ++counts[static_cast<size_t>(o)];
  }
  return counts;
}

NumericalSemigroup NumericalSemigroup::normalized() const {
  if (gcd_ == 1) return *this;
  std::vector<Int> divided;
  divided.reserve(gens_.size());
  for (Int g : gens_) divided.push_back(g / gcd_);
  return from_generators(divided);
}

std::string NumericalSemigroup::str() const {
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
  os << ">";
  return os.str();
}

NumericalSemigroup NumericalSemigroup::parse(const std::string& text) {
  std::vector<Int> vals;
  std::string cur;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (c == '<' || c == '>' || c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) {
        vals.push_back(std::stoll(cur));
        cur.clear();
      }
    } else {
      throw ParseError("bad character in semigroup literal: " + text);
    }
  }
  if (!cur.empty()) vals.push_back(std::stoll(cur));
  if (vals.empty()) throw ParseError("empty semigroup literal: " + text);
  return from_generators(vals);
}

}  // namespace tancone
