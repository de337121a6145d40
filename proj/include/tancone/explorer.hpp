#pragma once

#include <functional>
#include <map>
#include <optional>

#include "tancone/families.hpp"
#include "tancone/resolution.hpp"
#include "tancone/tangentcone.hpp"

namespace tancone {

struct ScanOptions {
  bool with_betti = false;  // resolutions dominate runtime; mu-only by default
  bool with_vu_check = true;
  bool with_oracle_check = true;  // per-row Hilbert cross-check
  int jobs = 0;                   // 0 = hardware concurrency
  GroebnerConfig gb;
  std::function<void(const std::string&)> progress;  // heartbeat sink, may be empty
};

struct ShiftScanRow {
  Int k = 0;
  std::vector<Int> generators;
  int mu_H = 0;
  int mu_I = 0;
  int mu_I_star = 0;
  bool cm = false;
  bool inhomogeneous_gens_shape_ok = false;  // Vu form check on minimal generators
  std::optional<BettiTable> betti_I;
  std::optional<BettiTable> betti_I_star;
  bool skipped = false;
  std::string skip_reason;

  bool operator==(const ShiftScanRow& o) const;
};

struct ScanReport {
  std::vector<Int> base;
  Int kmin = 0, kmax = 0;
  bool with_betti = false;
  std::vector<ShiftScanRow> rows;
  /// Least shift from which Betti agreement (mu agreement in mu-only scans)
  /// plus Cohen-Macaulayness persist to the window end; nullopt = "not
  /// observed".
  std::optional<Int> detected_k0;
  /// Smallest period of the row-signature tail covering two full periods;
  /// nullopt = "inconclusive".
  std::optional<Int> detected_period;
  bool period_divides_span = false;  // observed period divides a_r - a_1
  std::map<std::string, std::string> verdicts;  // check -> pass/fail/not observed/inconclusive
};

/// Window heuristic: a_r - 2 a_1 + 4 (a_r - a_1), clamped positive. k0 itself
/// is not computable from the existence theorem, so windows are heuristics
/// and reports stay honest about what was not observed.
Int default_scan_kmax(const std::vector<Int>& base);

ScanReport shift_scan(const std::vector<Int>& base, Int kmin, Int kmax,
                      const ScanOptions& opts = {});

/// Smallest p <= max_period such that the longest p-periodic tail of seq has
/// length at least 2p.
std::optional<Int> detect_period(const std::vector<Int>& seq, Int max_period);

/// Every inhomogeneous minimal binomial generator has the shape
/// x1^alpha u - v xr^beta with alpha, beta > 0, u and v monomials in the
/// middle variables, and strictly larger degree on the x1 side.
bool vu_shape_check(const std::vector<Polynomial>& min_gens);

struct Violation {
  std::string witness;  // human-readable description
  std::string replay;   // CLI command reproducing the computation
};

struct ConjectureReport {
  std::string name;
  std::string verdict;  // pass | fail | inconclusive
  Int instances_checked = 0;
  Int instances_unverified = 0;  // budget-limited items, never counted as pass
  std::vector<Violation> violations;
  std::vector<std::string> notes;
};

/// Enumerates all strictly increasing bases with a_1 = 0, a_r = w <= wmax and
/// scans each shifted family, checking mu(I*) <= C(width+1, 2) on every row
/// and the equality classification against the interval-family recognizer.
ConjectureReport verify_conjecture_width(Int wmax, double shift_window_factor = 1.0,
                                         const ScanOptions& opts = {});

/// Checks mu(I*_H) <= mu(I*_Htilde) per sample; for arithmetic-sequence
/// samples additionally the termwise Betti inequality.
ConjectureReport verify_conjecture_tilde(const std::vector<NumericalSemigroup>& samples,
                                         const ScanOptions& opts = {});

/// Deterministic worker pool over [0, n); exceptions other than per-item
/// handled ones propagate after all workers join.
void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn);

}  // namespace tancone
