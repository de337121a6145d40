#pragma once

#include "tancone/groebner.hpp"
#include "tancone/semigroup.hpp"

namespace tancone {

struct StandardBasisOptions {
  bool strict_lex = false;        // pure lex below s (reproduces the hand-computed bases)
  bool verify_membership = true;  // check dehomogenized elements against I
  GroebnerConfig gb;
};

/// Output of the homogenization pipeline: a standard basis of I, generators
/// of the initial ideal I*, and its minimal generator count under the
/// standard grading.
struct StandardBasisResult {
  std::vector<Polynomial> standard_basis;
  std::vector<Polynomial> initial_ideal_gens;
  std::vector<Polynomial> minimal_star_gens;
  int mu_star = 0;
  bool saturation_changed = false;
};

/// Computes I* = (f* | f in I) for I inside the irrelevant ideal:
/// homogenize the generators with a fresh variable s, saturate by s, take a
/// reduced basis under an order with s greatest, dehomogenize, read initial
/// forms, minimalize by graded Nakayama.
StandardBasisResult standard_basis(const std::vector<Polynomial>& I_gens,
                                   const StandardBasisOptions& opts = {});

/// True iff gens lie in I and their initial forms generate I*.
bool is_standard_basis(const std::vector<Polynomial>& gens,
                       const std::vector<Polynomial>& I_gens,
                       const StandardBasisOptions& opts = {});

/// Nonzerodivisor test (I* : x1) = I* on generators of I*; x1 is the variable
/// of the smallest semigroup generator. For these one-dimensional graded
/// rings this is the Cohen-Macaulay criterion for the tangent cone.
bool tangent_cone_is_cm_from_star(const std::vector<Polynomial>& star_gens,
                                  const GroebnerConfig& cfg = {});
bool tangent_cone_is_cm(const NumericalSemigroup& H, const StandardBasisOptions& opts = {});

struct MuRecord {
  int mu_I = 0;
  int mu_I_star = 0;
  bool betti_available = false;  // filled by the scan layer when resolutions ran
};
MuRecord mu_and_mu_star(const NumericalSemigroup& H, const StandardBasisOptions& opts = {});

/// Full tangent-cone record for a semigroup, cross-checked against the
/// factorization-length Hilbert oracle. An oracle mismatch throws; it is
/// never reported as a result.
struct TangentCone {
  NumericalSemigroup H;              // gcd-normalized
  std::vector<Polynomial> ideal_gens;
  StandardBasisResult sb;
  int mu_I = 0;
  bool cm = false;
  Int oracle_dmax = 0;
};
TangentCone tangent_cone_of(const NumericalSemigroup& H, const StandardBasisOptions& opts = {});

}  // namespace tancone
