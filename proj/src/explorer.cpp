#include "tancone/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "tancone/toric.hpp"

namespace tancone {

bool ShiftScanRow::operator==(const ShiftScanRow& o) const {
  return k == o.k && generators == o.generators && mu_H == o.mu_H && mu_I == o.mu_I &&
         mu_I_star == o.mu_I_star && cm == o.cm &&
         inhomogeneous_gens_shape_ok == o.inhomogeneous_gens_shape_ok &&
         betti_I == o.betti_I && betti_I_star == o.betti_I_star && skipped == o.skipped &&
         skip_reason == o.skip_reason;
}

void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn) {
  if (n == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  size_t workers = jobs > 0 ? static_cast<size_t>(jobs) : (hw ? hw : 2);
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

Int default_scan_kmax(const std::vector<Int>& base) {
  Int a1 = base.front(), ar = base.back();
  Int k = (ar - 2 * a1) + 4 * (ar - a1);
  return std::max<Int>(k, 8);
}

namespace {

std::optional<Int> longest_periodic_tail(const std::vector<std::string>& sig, Int max_period) {
  Int n = static_cast<Int>(sig.size());
  for (Int p = 1; p <= max_period; ++p) {
    Int start = n;  // smallest s with sig[i] == sig[i+p] for all i in [s, n-p)
    for (Int i = n - p - 1; i >= 0; --i) {
      if (sig[static_cast<size_t>(i)] == sig[static_cast<size_t>(i + p)])
        start = i;
      else
        break;
    }
    if (start < n && n - start >= 2 * p) return p;
  }
  return std::nullopt;
}

std::string betti_signature(const std::optional<BettiTable>& b) {
  if (!b) return "-";
  std::ostringstream os;
  for (Int t : b->total) os << t << ",";
  os << "|";
  for (const auto& layer : b->graded) {
    for (const auto& [d, c] : layer) os << d << ":" << c << ";";
    os << "/";
  }
  return os.str();
}

std::string row_signature(const ShiftScanRow& r) {
  std::ostringstream os;
  os << r.mu_H << "|" << r.mu_I << "|" << r.mu_I_star << "|" << (r.cm ? 1 : 0) << "|"
     << (r.inhomogeneous_gens_shape_ok ? 1 : 0) << "|" << betti_signature(r.betti_I) << "|"
     << betti_signature(r.betti_I_star);
  return os.str();
}

bool rows_agree(const ShiftScanRow& r) {
  if (r.skipped) return false;
  if (r.betti_I && r.betti_I_star) return *r.betti_I == *r.betti_I_star && r.cm;
  return r.mu_I == r.mu_I_star && r.cm;
}

}  // namespace

std::optional<Int> detect_period(const std::vector<Int>& seq, Int max_period) {
  std::vector<std::string> sig;
  sig.reserve(seq.size());
  for (Int v : seq) sig.push_back(std::to_string(v));
  return longest_periodic_tail(sig, max_period);
}

bool vu_shape_check(const std::vector<Polynomial>& min_gens) {
  for (const Polynomial& g : min_gens) {
    if (g.is_zero()) continue;
    if (g.is_homogeneous()) continue;  // the form only constrains inhomogeneous generators
    if (g.term_count() != 2) return false;
    int n = g.nvars();
    const Term& t0 = g.terms()[0];
    const Term& t1 = g.terms()[1];
    if (t0.coeff + t1.coeff != 0) return false;  // not of the shape m - m'
    Int d0 = total_degree(t0.mono), d1 = total_degree(t1.mono);
    if (d0 == d1) return false;  // inhomogeneous binomial has distinct degrees
    const Exponents& hi = d0 > d1 ? t0.mono : t1.mono;
    const Exponents& lo = d0 > d1 ? t1.mono : t0.mono;
    // high side: x1^alpha u, low side: v xr^beta
    if (hi[0] <= 0) return false;
    if (hi[static_cast<size_t>(n - 1)] != 0) return false;
    if (lo[static_cast<size_t>(n - 1)] <= 0) return false;
    if (lo[0] != 0) return false;
  }
  return true;
}

namespace {

ShiftScanRow compute_row(const std::vector<Int>& base, Int k, const ScanOptions& opts) {
  ShiftScanRow row;
  row.k = k;
  std::vector<Int> raw;
  for (Int a : base) raw.push_back(a + k);
  NumericalSemigroup H = NumericalSemigroup::from_generators(raw);
  row.generators = H.generators();
  row.mu_H = H.mu();
  if (H.mu() == 1) {
    row.mu_I = 0;
    row.mu_I_star = 0;
    row.cm = true;  // polynomial ring
    row.inhomogeneous_gens_shape_ok = true;
    if (opts.with_betti) {
      BettiTable trivial;
      trivial.total = {1};
      trivial.graded.push_back({{0, 1}});
      row.betti_I = trivial;
      row.betti_I_star = trivial;
    }
    return row;
  }
  StandardBasisOptions sbo;
  sbo.gb = opts.gb;
  NumericalSemigroup N = H.normalized();
  std::vector<Polynomial> gens = toric_ideal(N, opts.gb);
  Grading hg = toric_grading(N);
  std::vector<Polynomial> mingens = minimal_generators(gens, hg, opts.gb);
  row.mu_I = static_cast<int>(mingens.size());
  StandardBasisResult sb = standard_basis(gens, sbo);
  row.mu_I_star = sb.mu_star;
  row.cm = tangent_cone_is_cm_from_star(sb.minimal_star_gens, opts.gb);
  row.inhomogeneous_gens_shape_ok = opts.with_vu_check ? vu_shape_check(mingens) : false;
  if (opts.with_oracle_check) {
    Int maxdeg = 2;
    for (const Polynomial& g : sb.minimal_star_gens)
      maxdeg = std::max(maxdeg, g.total_degree());
    Int dmax = 2 * maxdeg + 2;
    std::vector<Polynomial> star = sb.minimal_star_gens;
    if (star.empty()) star.push_back(Polynomial::zero(N.mu()));
    if (hilbert_function(star, dmax, opts.gb) != N.tangent_hilbert_oracle(dmax))
      throw OracleMismatch("scan row failed the Hilbert cross-check at k=" + std::to_string(k));
  }
  if (opts.with_betti) {
    row.betti_I = minimal_free_resolution(mingens, hg, opts.gb);
    row.betti_I_star =
        minimal_free_resolution(sb.minimal_star_gens, Grading::standard(N.mu()), opts.gb);
  }
  return row;
}

}  // namespace

ScanReport shift_scan(const std::vector<Int>& base, Int kmin, Int kmax, const ScanOptions& opts) {
  if (base.empty()) throw MathError("scan base must be nonempty");
  for (size_t i = 1; i < base.size(); ++i)
    if (base[i] <= base[i - 1]) throw MathError("scan base must be strictly increasing");
  if (base.front() < 0) throw MathError("scan base entries must be nonnegative");
  if (base.front() + kmin <= 0) throw MathError("kmin must make all shifted entries positive");
  if (kmax < kmin) throw MathError("kmax < kmin");
  Int span = base.back() - base.front();
  ScanReport rep;
  rep.base = base;
  rep.kmin = kmin;
  rep.kmax = kmax;
  rep.with_betti = opts.with_betti;
  if (kmax - kmin < 2 * span)
    rep.verdicts["window"] = "short: fewer than two periods of shifts requested";

  size_t n = static_cast<size_t>(kmax - kmin + 1);
  rep.rows.assign(n, ShiftScanRow{});
  std::mutex progress_mu;
  std::atomic<size_t> done{0};
  parallel_for(n, opts.jobs, [&](size_t i) {
    Int k = kmin + static_cast<Int>(i);
    try {
      rep.rows[i] = compute_row(base, k, opts);
    } catch (const BudgetExceeded& e) {
      ShiftScanRow row;
      row.k = k;
      row.skipped = true;
      row.skip_reason = e.what();
      rep.rows[i] = row;
    }
    size_t d = done.fetch_add(1) + 1;
    if (opts.progress) {
      std::lock_guard<std::mutex> lock(progress_mu);
      opts.progress("scan k=" + std::to_string(k) + " done (" + std::to_string(d) + "/" +
                    std::to_string(n) + ")");
    }
  });

  // stabilization: least k from which agreement persists to the window end
  std::optional<Int> k0;
  for (size_t i = n; i-- > 0;) {
    if (rows_agree(rep.rows[i]))
      k0 = rep.rows[i].k;
    else
      break;
  }
  rep.detected_k0 = k0;

  // periodicity of the full row signature, on the clean tail
  size_t tail_start = 0;
  for (size_t i = 0; i < n; ++i)
    if (rep.rows[i].skipped) tail_start = i + 1;
  std::vector<std::string> sig;
  for (size_t i = tail_start; i < n; ++i) sig.push_back(row_signature(rep.rows[i]));
  std::optional<Int> period = longest_periodic_tail(sig, std::max<Int>(span, 1));
  rep.detected_period = period;
  rep.period_divides_span = period && span > 0 && span % *period == 0;

  rep.verdicts["stabilization"] =
      k0 ? (period && (kmax - *k0 + 1) >= 2 * *period ? "pass" : "inconclusive")
         : "not observed";
  rep.verdicts["periodicity"] = period ? "pass" : "inconclusive";
  rep.verdicts["period_divides_span"] =
      period ? (rep.period_divides_span ? "pass" : "fail") : "inconclusive";
  if (k0) {
    bool cm_const = true;
    for (const ShiftScanRow& r : rep.rows)
      if (!r.skipped && r.k >= *k0 && !r.cm) cm_const = false;
    rep.verdicts["cm_persistence"] = cm_const ? "pass" : "fail";
  } else {
    rep.verdicts["cm_persistence"] = "not observed";
  }
  if (opts.with_betti) {
    // Gorenstein flag periodicity over the clean tail
    std::vector<std::string> gor;
    for (size_t i = tail_start; i < n; ++i) {
      const auto& b = rep.rows[i].betti_I;
      gor.push_back(b && !b->total.empty() && b->total.back() == 1 ? "G" : "-");
    }
    std::optional<Int> gp = longest_periodic_tail(gor, std::max<Int>(span, 1));
    rep.verdicts["gorenstein_periodic"] = gp ? "pass" : "inconclusive";
  }
  return rep;
}

ConjectureReport verify_conjecture_width(Int wmax, double shift_window_factor,
                                         const ScanOptions& opts) {
  if (wmax < 1) throw MathError("wmax must be >= 1");
  ConjectureReport rep;
  rep.name = "conjecture-1-width-bound";
  bool any_inconclusive = false;
  for (Int w = 1; w <= wmax; ++w) {
    // all strictly increasing sequences 0 = a_1 < ... < a_r = w
    Int middles = w > 1 ? (Int(1) << (w - 1)) : 1;
    for (Int mask = 0; mask < middles; ++mask) {
      std::vector<Int> base{0};
      for (Int m = 1; m < w; ++m)
        if (mask & (Int(1) << (m - 1))) base.push_back(m);
      if (w > 0) base.push_back(w);
      Int kmax = default_scan_kmax(base);
      kmax = std::max<Int>(kmax, static_cast<Int>(static_cast<double>(kmax) *
                                                  shift_window_factor));
      ScanReport scan = shift_scan(base, 1, kmax, opts);
      std::ostringstream basestr;
      for (size_t i = 0; i < base.size(); ++i) basestr << (i ? "," : "") << base[i];
      for (const ShiftScanRow& row : scan.rows) {
        if (row.skipped) {
          ++rep.instances_unverified;
          any_inconclusive = true;
          continue;
        }
        ++rep.instances_checked;
        Int width = row.generators.back() - row.generators.front();
        Int bound = binomial(width + 1, 2);
        std::ostringstream genstr;
        for (size_t i = 0; i < row.generators.size(); ++i)
          genstr << (i ? "," : "") << row.generators[i];
        if (row.mu_I_star > bound) {
          rep.violations.push_back(
              {"mu(I*) = " + std::to_string(row.mu_I_star) + " exceeds C(width+1,2) = " +
                   std::to_string(bound) + " for <" + genstr.str() + "> (base " + basestr.str() +
                   ", k=" + std::to_string(row.k) + ")",
               "tancone tangentcone " + genstr.str()});
        }
        if (row.mu_H >= 2) {
          NumericalSemigroup H = NumericalSemigroup::from_generators(row.generators);
          bool equality = row.mu_I_star == bound;
          bool interval = interval_equality_recognize(H).has_value();
          if (equality != interval) {
            rep.violations.push_back(
                {"equality classification failed for <" + genstr.str() + ">: mu(I*)=" +
                     std::to_string(row.mu_I_star) + ", bound=" + std::to_string(bound) +
                     ", interval-family=" + (interval ? "yes" : "no"),
                 "tancone tangentcone " + genstr.str()});
          }
        }
      }
      // the window must reach stabilization plus a period to count as covered
      if (!scan.detected_k0 || scan.verdicts.at("stabilization") != "pass")
        any_inconclusive = true;
    }
  }
  rep.verdict = !rep.violations.empty() ? "fail" : (any_inconclusive ? "inconclusive" : "pass");
  return rep;
}

ConjectureReport verify_conjecture_tilde(const std::vector<NumericalSemigroup>& samples,
                                         const ScanOptions& opts) {
  ConjectureReport rep;
  rep.name = "conjecture-2-interval-completion";
  StandardBasisOptions sbo;
  sbo.gb = opts.gb;
  bool any_unverified = false;
  std::mutex rep_mu;
  parallel_for(samples.size(), opts.jobs, [&](size_t idx) {
    const NumericalSemigroup& H = samples[idx];
    try {
      NumericalSemigroup tilde = H.interval_completion();
      MuRecord mh = mu_and_mu_star(H, sbo);
      MuRecord mt = mu_and_mu_star(tilde, sbo);
      std::lock_guard<std::mutex> lock(rep_mu);
      ++rep.instances_checked;
      if (mh.mu_I_star > mt.mu_I_star)
        rep.violations.push_back({"mu(I*_H) = " + std::to_string(mh.mu_I_star) + " > mu(I*_H~) = " +
                                      std::to_string(mt.mu_I_star) + " for H = " + H.str() +
                                      ", H~ = " + tilde.str(),
                                  "tancone tangentcone " + H.str()});
      if (H == tilde && mh.mu_I_star != mt.mu_I_star)
        rep.violations.push_back({"interval semigroup disagrees with itself: " + H.str(), ""});
      // arithmetic samples: termwise Betti inequality for the tangent cones
      const std::vector<Int>& g = H.generators();
      bool arithmetic = g.size() >= 3;
      for (size_t i = 2; i < g.size() && arithmetic; ++i)
        if (g[i] - g[i - 1] != g[1] - g[0]) arithmetic = false;
      if (arithmetic && H.mu() >= 3) {
        std::vector<Polynomial> sh = standard_basis(toric_ideal(H, opts.gb), sbo).minimal_star_gens;
        std::vector<Polynomial> st =
            standard_basis(toric_ideal(tilde, opts.gb), sbo).minimal_star_gens;
        BettiTable bh = minimal_free_resolution(sh, Grading::standard(H.normalized().mu()), opts.gb);
        BettiTable bt =
            minimal_free_resolution(st, Grading::standard(tilde.normalized().mu()), opts.gb);
        for (size_t i = 0; i < bh.total.size(); ++i) {
          Int lhs = bh.total[i];
          Int rhs = i < bt.total.size() ? bt.total[i] : 0;
          if (lhs > rhs)
            rep.violations.push_back(
                {"beta_" + std::to_string(i) + "(I*_H) = " + std::to_string(lhs) +
                     " > beta(I*_H~) = " + std::to_string(rhs) + " for H = " + H.str(),
                 "tancone betti " + H.str() + " --star"});
        }
      }
      if (opts.progress) opts.progress("tilde check done for " + H.str());
    } catch (const BudgetExceeded&) {
      std::lock_guard<std::mutex> lock(rep_mu);
      ++rep.instances_unverified;
      any_unverified = true;
    }
  });
  rep.verdict =
      !rep.violations.empty() ? "fail" : (any_unverified ? "inconclusive" : "pass");
  return rep;
}

}  // namespace tancone
