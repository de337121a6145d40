#include "tancone/order.hpp"

#include <algorithm>
#include <sstream>

namespace tancone {

namespace {

std::vector<int> identity_priority(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  return p;
}

void check_priority(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int i : p) {
    if (i < 0 || static_cast<size_t>(i) >= p.size() || seen[static_cast<size_t>(i)])
      throw MathError("invalid variable priority permutation");
    seen[static_cast<size_t>(i)] = 1;
  }
}

int cmp_lex(const Exponents& a, const Exponents& b, const std::vector<int>& priority) {
  for (int v : priority) {
    size_t i = static_cast<size_t>(v);
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

// Degrevlex tie-break: among equal degrees, the monomial with the larger
// exponent on the cheapest (last-priority) differing variable is smaller.
int cmp_revlex_tail(const Exponents& a, const Exponents& b, const std::vector<int>& priority) {
  for (auto it = priority.rbegin(); it != priority.rend(); ++it) {
    size_t i = static_cast<size_t>(*it);
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int cmp_int(Int a, Int b) { return a == b ? 0 : (a > b ? 1 : -1); }

}  // namespace

MonomialOrder MonomialOrder::lex(int nvars) { return lex(identity_priority(nvars)); }

MonomialOrder MonomialOrder::lex(std::vector<int> priority) {
  check_priority(priority);
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.nvars_ = static_cast<int>(priority.size());
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::degrevlex(int nvars) { return degrevlex(identity_priority(nvars)); }

MonomialOrder MonomialOrder::degrevlex(std::vector<int> priority) {
  check_priority(priority);
  MonomialOrder o;
  o.kind_ = Kind::DegRevLex;
  o.nvars_ = static_cast<int>(priority.size());
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder MonomialOrder::weighted_lex(std::vector<Int> weights, std::vector<int> priority) {
  check_priority(priority);
  if (weights.size() != priority.size()) throw MathError("weights/priority size mismatch");
  for (Int w : weights)
    if (w < 1) throw MathError("order weights must be positive");
  MonomialOrder o;
  o.kind_ = Kind::WeightedLex;
  o.nvars_ = static_cast<int>(priority.size());
  o.priority_ = std::move(priority);
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::weighted_degrevlex(std::vector<Int> weights,
                                                std::vector<int> priority) {
  MonomialOrder o = weighted_lex(std::move(weights), std::move(priority));
  o.kind_ = Kind::WeightedDegRevLex;
  return o;
}

MonomialOrder MonomialOrder::block(std::vector<int> front_vars, Kind front_kind, Kind back_kind,
                                   int nvars) {
  std::vector<char> in_front(static_cast<size_t>(nvars), 0);
  for (int v : front_vars) {
    if (v < 0 || v >= nvars) throw MathError("block variable out of range");
    in_front[static_cast<size_t>(v)] = 1;
  }
  std::vector<int> back_vars;
  for (int i = 0; i < nvars; ++i)
    if (!in_front[static_cast<size_t>(i)]) back_vars.push_back(i);
  if (front_vars.empty() || back_vars.empty()) throw MathError("block order needs two nonempty blocks");

  auto make_sub = [](Kind k, int n) {
    switch (k) {
      case Kind::Lex: return lex(n);
      case Kind::DegRevLex: return degrevlex(n);
      default: throw MathError("block sub-orders must be lex or degrevlex");
    }
  };
  MonomialOrder o;
  o.kind_ = Kind::Block;
  o.nvars_ = nvars;
  o.front_order_ = std::make_shared<MonomialOrder>(make_sub(front_kind, static_cast<int>(front_vars.size())));
  o.back_order_ = std::make_shared<MonomialOrder>(make_sub(back_kind, static_cast<int>(back_vars.size())));
  o.front_vars_ = std::move(front_vars);
  o.back_vars_ = std::move(back_vars);
  return o;
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  if (static_cast<int>(a.size()) != nvars_ || static_cast<int>(b.size()) != nvars_)
    throw RingMismatch("monomial order applied to wrong ring");
  switch (kind_) {
    case Kind::Lex:
      return cmp_lex(a, b, priority_);
    case Kind::DegRevLex: {
      int c = cmp_int(total_degree(a), total_degree(b));
      if (c != 0) return c;
      return cmp_revlex_tail(a, b, priority_);
    }
    case Kind::WeightedLex: {
      Int wa = 0, wb = 0;
      for (int i = 0; i < nvars_; ++i) {
        wa += weights_[static_cast<size_t>(i)] * a[static_cast<size_t>(i)];
        wb += weights_[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
      }
      int c = cmp_int(wa, wb);
      if (c != 0) return c;
      return cmp_lex(a, b, priority_);
    }
    case Kind::WeightedDegRevLex: {
      Int wa = 0, wb = 0;
      for (int i = 0; i < nvars_; ++i) {
        wa += weights_[static_cast<size_t>(i)] * a[static_cast<size_t>(i)];
        wb += weights_[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
      }
      int c = cmp_int(wa, wb);
      if (c != 0) return c;
      return cmp_revlex_tail(a, b, priority_);
    }
    case Kind::Block: {
      auto project = [](const Exponents& e, const std::vector<int>& vars) {
        Exponents r(vars.size());
        for (size_t i = 0; i < vars.size(); ++i) r[i] = e[static_cast<size_t>(vars[i])];
        return r;
      };
      int c = front_order_->compare(project(a, front_vars_), project(b, front_vars_));
      if (c != 0) return c;
      return back_order_->compare(project(a, back_vars_), project(b, back_vars_));
    }
  }
  throw MathError("unreachable order kind");
}

std::string MonomialOrder::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Lex: os << "lex"; break;
    case Kind::DegRevLex: os << "degrevlex"; break;
    case Kind::WeightedLex: os << "wlex"; break;
    case Kind::WeightedDegRevLex: os << "wdegrevlex"; break;
    case Kind::Block: {
      os << "block(front={";
      for (size_t i = 0; i < front_vars_.size(); ++i)
        os << (i ? "," : "") << front_vars_[i];
      os << "}:" << front_order_->describe() << ", back:" << back_order_->describe() << ")";
      return os.str();
    }
  }
  bool id = true;
  for (size_t i = 0; i < priority_.size(); ++i)
    if (priority_[i] != static_cast<int>(i)) id = false;
  if (!id) {
    os << "[";
    for (size_t i = 0; i < priority_.size(); ++i) os << (i ? "," : "") << priority_[i];
    os << "]";
  }
  return os.str();
}

}  // namespace tancone
