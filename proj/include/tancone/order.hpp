#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tancone/ring.hpp"

namespace tancone {

/// Total order on monomials of a fixed ring, compatible with multiplication
/// and with 1 minimal. Value type; block orders nest one level of sub-orders.
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, WeightedLex, WeightedDegRevLex, Block };

  static MonomialOrder lex(int nvars);
  static MonomialOrder degrevlex(int nvars);
  /// `priority` lists variable indices from greatest to smallest.
  static MonomialOrder lex(std::vector<int> priority);
  static MonomialOrder degrevlex(std::vector<int> priority);
  static MonomialOrder weighted_lex(std::vector<Int> weights, std::vector<int> priority);
  static MonomialOrder weighted_degrevlex(std::vector<Int> weights, std::vector<int> priority);
  /// Eliminates `front_vars`: any monomial involving a front variable beats
  /// any monomial in the back block. Sub-order kinds apply inside each block.
  static MonomialOrder block(std::vector<int> front_vars, Kind front_kind, Kind back_kind,
                             int nvars);

  int nvars() const { return nvars_; }
  Kind kind() const { return kind_; }
  const std::vector<int>& front_vars() const { return front_vars_; }

  /// -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Exponents& a, const Exponents& b) const;
  bool greater(const Exponents& a, const Exponents& b) const { return compare(a, b) > 0; }
  bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }

  std::string describe() const;

 private:
  MonomialOrder() = default;

  Kind kind_ = Kind::DegRevLex;
  int nvars_ = 0;
  std::vector<int> priority_;   // variable indices, greatest first
  std::vector<Int> weights_;    // WeightedLex / WeightedDegRevLex only
  std::vector<int> front_vars_; // Block only
  std::vector<int> back_vars_;  // Block only
  std::shared_ptr<MonomialOrder> front_order_;
  std::shared_ptr<MonomialOrder> back_order_;
};

}  // namespace tancone
