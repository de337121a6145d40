#pragma once

#include <array>

#include "tancone/groebner.hpp"
#include "tancone/semigroup.hpp"

namespace tancone {

/// Display ring for the defining ideal of K[H]: one variable per minimal
/// generator, x,y,z,t for up to four generators, x1..xr beyond.
Ring toric_ring(const NumericalSemigroup& H);

/// H-grading deg x_i = a_i (of the gcd-normalized semigroup).
Grading toric_grading(const NumericalSemigroup& H);

/// Generators of the kernel of x_i -> t^{a_i}, by eliminating t from
/// (x_i - t^{a_i}). gcd > 1 is divided out first (isomorphic semigroup ring).
/// Every output is H-homogeneous and vanishes under the parametrization;
/// both facts are checked before returning.
std::vector<Polynomial> toric_ideal(const NumericalSemigroup& H, const GroebnerConfig& cfg = {});

/// Structure constants of a 3-generated semigroup: c_i is the least positive
/// multiple of n_i lying in the semigroup of the other two, and the r matrix
/// is a witness decomposition c_i n_i = sum_j r_ij n_j.
struct HerzogData {
  std::array<Int, 3> c{};
  std::array<std::array<Int, 3>, 3> r{};  // r[i][j], diagonal unused
};

HerzogData herzog_data(const NumericalSemigroup& H);

/// The three binomials x^c1 - y^r12 z^r13, y^c2 - x^r21 z^r23,
/// z^c3 - x^r31 y^r32 in the toric ring.
std::array<Polynomial, 3> herzog_generators(const HerzogData& d);

/// Maps f(x_i) to the univariate polynomial f(t^{a_i}); zero iff f is in I_H.
bool vanishes_under_parametrization(const Polynomial& f, const std::vector<Int>& weights);

}  // namespace tancone
