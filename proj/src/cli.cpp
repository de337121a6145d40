#include "tancone/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "tancone/serialize.hpp"
#include "tancone/toric.hpp"

namespace tancone {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void emit_error(std::ostream& err, const CliConfig& cfg, const std::string& kind,
                const std::string& message) {
  if (cfg.format == "json") {
    err << json{{"schema", kSchemaTag}, {"kind", "error"}, {"error", kind}, {"message", message}}
               .dump()
        << "\n";
  } else {
    err << "error (" << kind << "): " << message << "\n";
  }
}

ScanOptions scan_options(const CliConfig& cfg, std::ostream& err, bool with_betti) {
  ScanOptions opts;
  opts.gb = cfg.gb();
  opts.jobs = cfg.jobs;
  opts.with_betti = with_betti;
  if (!cfg.quiet)
    opts.progress = [&err](const std::string& line) { err << "# " << line << "\n"; };
  return opts;
}

std::string join_ints(const std::vector<Int>& v, const char* sep = ",") {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string betti_text(const BettiTable& b) {
  std::ostringstream os;
  os << "total: " << join_ints(b.total, " ");
  os << "\ngraded:";
  for (size_t i = 0; i < b.graded.size(); ++i) {
    os << "\n  " << i << ":";
    for (const auto& [deg, count] : b.graded[i]) os << " " << deg << "^" << count;
  }
  return os.str();
}

int cmd_semigroup_info(const CliConfig& cfg, const std::string& gens, Int shift_k,
                       std::ostream& out) {
  NumericalSemigroup H = NumericalSemigroup::parse(gens);
  if (shift_k > 0) H = H.shift(shift_k);
  json j{{"schema", kSchemaTag},
         {"kind", "semigroup_info"},
         {"semigroup", semigroup_to_json(H)},
         {"mu", H.mu()},
         {"width", H.width()},
         {"multiplicity", H.multiplicity()},
         {"gcd", H.gcd()}};
  if (H.gcd() == 1) {
    j["frobenius"] = H.frobenius_number();
    j["symmetric"] = H.is_symmetric();
    j["apery_of_multiplicity"] = H.apery_set(H.multiplicity());
  }
  j["interval_completion"] = semigroup_to_json(H.interval_completion());
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << H.str() << "\n";
    out << "mu = " << H.mu() << ", width = " << H.width()
        << ", multiplicity = " << H.multiplicity() << ", gcd = " << H.gcd() << "\n";
    if (H.gcd() == 1)
      out << "frobenius = " << H.frobenius_number()
          << ", symmetric = " << (H.is_symmetric() ? "yes" : "no") << "\n";
    out << "interval completion: " << H.interval_completion().str() << "\n";
  }
  return kExitOk;
}

int cmd_ideal(const CliConfig& cfg, const std::string& gens, std::ostream& out) {
  NumericalSemigroup H = NumericalSemigroup::parse(gens).normalized();
  std::vector<Polynomial> I = toric_ideal(H, cfg.gb());
  std::vector<Polynomial> min = minimal_generators(I, toric_grading(H), cfg.gb());
  Ring ring = toric_ring(H);
  if (cfg.format == "json") {
    json arr = json::array(), marr = json::array();
    for (const Polynomial& p : I) arr.push_back(p.str(ring));
    for (const Polynomial& p : min) marr.push_back(p.str(ring));
    out << json{{"schema", kSchemaTag},
                {"kind", "toric_ideal"},
                {"semigroup", semigroup_to_json(H)},
                {"gens", arr},
                {"minimal_gens", marr},
                {"mu_I", min.size()}}
               .dump(2)
        << "\n";
  } else {
    out << "I_" << H.str() << " (mu = " << min.size() << "):\n";
    for (const Polynomial& p : min) out << "  " << p.str(ring) << "\n";
  }
  return kExitOk;
}

int cmd_tangentcone(const CliConfig& cfg, const std::string& gens, bool strict_lex,
                    std::ostream& out) {
  StandardBasisOptions opts;
  opts.gb = cfg.gb();
  opts.strict_lex = strict_lex;
  TangentCone tc = tangent_cone_of(NumericalSemigroup::parse(gens), opts);
  json j = tangent_cone_to_json(tc);
  j["tangent_hilbert"] = tc.H.tangent_hilbert_oracle(cfg.dmax_hilbert);
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    Ring ring = toric_ring(tc.H);
    out << "H = " << tc.H.str() << "\n";
    out << "mu(I) = " << tc.mu_I << ", mu(I*) = " << tc.sb.mu_star
        << ", cm = " << (tc.cm ? "yes" : "no") << "\n";
    out << "I* minimal generators:\n";
    for (const Polynomial& p : tc.sb.minimal_star_gens) out << "  " << p.str(ring) << "\n";
    out << "standard basis of I:\n";
    for (const Polynomial& p : tc.sb.standard_basis) out << "  " << p.str(ring) << "\n";
    out << "hilbert(tangent cone) up to " << cfg.dmax_hilbert << ": "
        << join_ints(tc.H.tangent_hilbert_oracle(cfg.dmax_hilbert), " ") << "\n";
  }
  return kExitOk;
}

int cmd_betti(const CliConfig& cfg, const std::string& gens, bool star, std::ostream& out) {
  NumericalSemigroup H = NumericalSemigroup::parse(gens).normalized();
  std::vector<Polynomial> I = toric_ideal(H, cfg.gb());
  BettiTable table;
  if (I.empty()) {
    table.total = {1};
    table.graded.push_back({{0, 1}});
  } else if (star) {
    StandardBasisOptions opts;
    opts.gb = cfg.gb();
    StandardBasisResult sb = standard_basis(I, opts);
    table = minimal_free_resolution(sb.minimal_star_gens, Grading::standard(H.mu()), cfg.gb());
  } else {
    table = minimal_free_resolution(I, toric_grading(H), cfg.gb());
  }
  if (cfg.format == "json") {
    out << json{{"schema", kSchemaTag},
                {"kind", "betti"},
                {"semigroup", semigroup_to_json(H)},
                {"star", star},
                {"betti", betti_to_json(table)}}
               .dump(2)
        << "\n";
  } else {
    out << "betti numbers of S/" << (star ? "I*" : "I") << " for " << H.str() << "\n"
        << betti_text(table) << "\n";
  }
  return kExitOk;
}

int cmd_family(const CliConfig& cfg, const std::string& name, int e, int h, int a, Int fa, Int fb,
               Int a1, Int d, int r, std::ostream& out, std::ostream& err) {
  StandardBasisOptions opts;
  opts.gb = cfg.gb();
  FamilyExpectation fam;
  std::vector<Polynomial> patil;
  std::vector<Int> expected_betti;
  if (name == "sally") {
    fam = sally(e);
  } else if (name == "bresinsky") {
    fam = bresinsky(h);
  } else if (name == "shibuta") {
    fam = shibuta_variant(a);
  } else if (name == "frobenius") {
    fam = frobenius_family(fa, fb);
  } else if (name == "arithmetic") {
    ArithmeticFamily af = arithmetic_family(a1, d, r);
    fam = af.base;
    patil = af.patil_gens;
    expected_betti = af.expected_betti;
  } else {
    throw MathError("unknown family: " + name +
                    " (expected sally|bresinsky|shibuta|frobenius|arithmetic)");
  }

  TangentCone tc = tangent_cone_of(fam.semigroup, opts);
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  expect(tc.sb.mu_star == fam.expected_mu_star,
         "mu(I*) = " + std::to_string(tc.sb.mu_star) + ", expected " +
             std::to_string(fam.expected_mu_star));
  if (fam.expected_mu_I)
    expect(tc.mu_I == *fam.expected_mu_I, "mu(I) = " + std::to_string(tc.mu_I) + ", expected " +
                                              std::to_string(*fam.expected_mu_I));
  if (!fam.expected_star_gens.empty())
    expect(ideal_equal(tc.sb.minimal_star_gens, fam.expected_star_gens, cfg.gb()),
           "I* differs from the family's closed form");
  if (fam.expected_star_degrees) {
    std::multiset<Int> degrees;
    for (const Polynomial& p : tc.sb.minimal_star_gens) degrees.insert(p.total_degree());
    expect(degrees == *fam.expected_star_degrees, "I* degree multiset differs");
  }
  if (fam.expected_cm)
    expect(tc.cm == *fam.expected_cm,
           std::string("cm = ") + (tc.cm ? "yes" : "no") + ", expected " +
               (*fam.expected_cm ? "yes" : "no"));
  if (fam.expected_frobenius)
    expect(fam.semigroup.frobenius_number() == *fam.expected_frobenius, "frobenius differs");
  if (fam.expected_symmetric)
    expect(fam.semigroup.is_symmetric() == *fam.expected_symmetric, "symmetry differs");
  if (!fam.standard_basis_candidate.empty())
    expect(is_standard_basis(fam.standard_basis_candidate, tc.ideal_gens, opts),
           "displayed basis is not a standard basis");
  if (!patil.empty()) {
    expect(ideal_equal(patil, tc.ideal_gens, cfg.gb()),
           "Patil generators do not generate the toric ideal");
    BettiTable bi = minimal_free_resolution(tc.ideal_gens, toric_grading(tc.H), cfg.gb());
    expect(bi.total == expected_betti, "Betti numbers differ from the closed form");
  }

  bool pass = failures.empty();
  if (cfg.format == "json") {
    json j{{"schema", kSchemaTag},
           {"kind", "family_check"},
           {"family", fam.family},
           {"semigroup", semigroup_to_json(fam.semigroup)},
           {"mu_I", tc.mu_I},
           {"mu_I_star", tc.sb.mu_star},
           {"cm", tc.cm},
           {"pass", pass},
           {"failures", failures}};
    out << j.dump(2) << "\n";
  } else {
    out << "family " << fam.family << " on " << fam.semigroup.str() << ": "
        << (pass ? "pass" : "FAIL") << "\n";
    out << "mu(I) = " << tc.mu_I << ", mu(I*) = " << tc.sb.mu_star
        << ", cm = " << (tc.cm ? "yes" : "no") << "\n";
    for (const std::string& f : failures) out << "  mismatch: " << f << "\n";
  }
  if (!pass) {
    emit_error(err, cfg, "family_mismatch", "family expectations not reproduced");
    return kExitMathFailure;
  }
  return kExitOk;
}

int cmd_scan(const CliConfig& cfg, const std::string& base_str, Int kmin, Int kmax,
             bool with_betti, std::ostream& out, std::ostream& err) {
  // parse integers directly: scan bases may start at 0, unlike semigroups
  std::vector<Int> base;
  std::string cur;
  for (char c : base_str + ",") {
    if (std::isdigit(static_cast<unsigned char>(c)))
      cur += c;
    else if (!cur.empty()) {
      base.push_back(std::stoll(cur));
      cur.clear();
    }
  }
  if (base.empty()) throw MathError("empty scan base");
  if (kmin < 0) kmin = base.front() == 0 ? 1 : 0;
  if (kmax < 0) kmax = default_scan_kmax(base);
  ScanReport rep = shift_scan(base, kmin, kmax, scan_options(cfg, err, with_betti));
  if (cfg.format == "json") {
    out << scan_to_jsonl(rep);
  } else if (cfg.format == "csv") {
    out << scan_to_csv(rep);
  } else {
    out << "scan base (" << join_ints(rep.base) << "), k = " << rep.kmin << ".." << rep.kmax
        << "\n";
    for (const ShiftScanRow& r : rep.rows) {
      out << "  k=" << r.k;
      if (r.skipped) {
        out << " skipped: " << r.skip_reason << "\n";
        continue;
      }
      out << " <" << join_ints(r.generators) << "> mu_H=" << r.mu_H << " mu_I=" << r.mu_I
          << " mu_I*=" << r.mu_I_star << " cm=" << (r.cm ? "y" : "n")
          << " vu=" << (r.inhomogeneous_gens_shape_ok ? "y" : "n");
      if (r.betti_I) out << " betti_I=(" << join_ints(r.betti_I->total, " ") << ")";
      if (r.betti_I_star) out << " betti_I*=(" << join_ints(r.betti_I_star->total, " ") << ")";
      out << "\n";
    }
    out << "stabilization k0: "
        << (rep.detected_k0 ? std::to_string(*rep.detected_k0) : "not observed") << "\n";
    out << "period: "
        << (rep.detected_period ? std::to_string(*rep.detected_period) : "inconclusive")
        << (rep.period_divides_span ? " (divides a_r - a_1)" : "") << "\n";
    for (const auto& [check, verdict] : rep.verdicts)
      out << "  " << check << ": " << verdict << "\n";
  }
  return kExitOk;
}

std::vector<NumericalSemigroup> random_semigroups(size_t count, Int max_gen, int max_r,
                                                  unsigned long seed, bool force_gcd1) {
  std::mt19937_64 rng(seed);
  std::vector<NumericalSemigroup> out;
  while (out.size() < count) {
    std::uniform_int_distribution<int> rdist(2, max_r);
    int r = rdist(rng);
    std::set<Int> vals;
    std::uniform_int_distribution<Int> gdist(2, max_gen);
    while (static_cast<int>(vals.size()) < r) vals.insert(gdist(rng));
    NumericalSemigroup H =
        NumericalSemigroup::from_generators(std::vector<Int>(vals.begin(), vals.end()));
    if (force_gcd1 && H.gcd() != 1) continue;
    out.push_back(H);
  }
  return out;
}

int cmd_conjecture(const CliConfig& cfg, const std::string& which, Int wmax,
                   const std::string& samples_str, Int random_count, Int max_gen,
                   std::ostream& out, std::ostream& err) {
  ConjectureReport rep;
  if (which == "width") {
    rep = verify_conjecture_width(wmax, cfg.window_factor, scan_options(cfg, err, false));
  } else if (which == "tilde") {
    std::vector<NumericalSemigroup> samples;
    if (!samples_str.empty()) {
      std::stringstream ss(samples_str);
      std::string item;
      while (std::getline(ss, item, ';'))
        if (!item.empty()) samples.push_back(NumericalSemigroup::parse(item));
    }
    if (random_count > 0) {
      auto extra = random_semigroups(static_cast<size_t>(random_count), max_gen, 4, cfg.seed,
                                     /*force_gcd1=*/false);
      samples.insert(samples.end(), extra.begin(), extra.end());
    }
    if (samples.empty()) throw MathError("conjecture tilde needs --samples or --random");
    rep = verify_conjecture_tilde(samples, scan_options(cfg, err, false));
  } else {
    throw MathError("unknown conjecture: " + which + " (expected width|tilde)");
  }
  if (cfg.format == "json") {
    out << conjecture_to_json(rep).dump(2) << "\n";
  } else {
    out << rep.name << ": " << rep.verdict << " (" << rep.instances_checked << " checked, "
        << rep.instances_unverified << " unverified)\n";
    for (const Violation& v : rep.violations) {
      out << "  VIOLATION: " << v.witness << "\n";
      if (!v.replay.empty()) out << "    replay: " << v.replay << "\n";
    }
  }
  return rep.verdict == "fail" ? kExitMathFailure : kExitOk;
}

}  // namespace

void load_config_file(const std::string& path, CliConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw MathError("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t b = s.find_first_not_of(" \t\r");
      size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) continue;
    if (key == "degree_budget") cfg.degree_budget = std::stoll(value);
    else if (key == "pair_budget") cfg.pair_budget = std::stol(value);
    else if (key == "dmax_hilbert") cfg.dmax_hilbert = std::stoll(value);
    else if (key == "format") cfg.format = value;
    else if (key == "jobs") cfg.jobs = std::stoi(value);
    else if (key == "seed") cfg.seed = std::stoul(value);
    else if (key == "window_factor") cfg.window_factor = std::stod(value);
    else if (key == "quiet") cfg.quiet = value == "1" || value == "true";
    else throw MathError("unknown config key: " + key);
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;

  // config file first (TANCONE_CONFIG or --config), flags override
  std::string config_path;
  if (const char* env = std::getenv("TANCONE_CONFIG")) config_path = env;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
  } catch (const std::exception& e) {
    emit_error(err, cfg, "config", e.what());
    return kExitUsage;
  }

  CLI::App app{"tangent cones of numerical semigroup rings: exact computations and scans"};
  app.set_help_all_flag("--help-all");
  std::string config_dummy;
  app.add_option("--config", config_dummy, "key=value config file (or TANCONE_CONFIG)");
  app.add_option("--format", cfg.format, "output format: text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_option("--degree-budget", cfg.degree_budget, "max polynomial degree in GB runs");
  app.add_option("--pair-budget", cfg.pair_budget, "max S-pairs per GB run");
  app.add_option("--dmax", cfg.dmax_hilbert, "Hilbert function range for reports");
  app.add_option("--window-factor", cfg.window_factor, "scan window multiplier");
  app.add_flag("--quiet", cfg.quiet, "suppress heartbeat lines on stderr");

  auto* sg = app.add_subcommand("semigroup", "semigroup queries");
  auto* sg_info = sg->add_subcommand("info", "invariants of a numerical semigroup");
  std::string sg_gens;
  Int sg_shift = 0;
  sg_info->add_option("gens", sg_gens, "generators, e.g. 3,5,7 or \"<3,5,7>\"")->required();
  sg_info->add_option("--shift", sg_shift, "shift every generator by k");

  auto* ideal_cmd = app.add_subcommand("ideal", "defining ideal of the semigroup ring");
  std::string ideal_gens;
  ideal_cmd->add_option("gens", ideal_gens)->required();

  auto* tc_cmd = app.add_subcommand("tangentcone", "I*, mu(I*), CM flag, Hilbert cross-check");
  std::string tc_gens;
  bool tc_strict_lex = false;
  tc_cmd->add_option("gens", tc_gens)->required();
  tc_cmd->add_flag("--strict-lex", tc_strict_lex, "pure lex order below the homogenizer");

  auto* betti_cmd = app.add_subcommand("betti", "graded Betti numbers of S/I or S/I*");
  std::string betti_gens;
  bool betti_star = false;
  betti_cmd->add_option("gens", betti_gens)->required();
  betti_cmd->add_flag("--star", betti_star, "resolve the tangent cone ideal I*");

  auto* family_cmd = app.add_subcommand("family", "validate a closed-form family instance");
  std::string family_name;
  int fam_e = 5, fam_h = 2, fam_a = 7;
  Int fam_fa = 4, fam_fb = 5, fam_a1 = 5, fam_d = 1;
  int fam_r = 4;
  family_cmd->add_option("name", family_name, "sally|bresinsky|shibuta|frobenius|arithmetic")
      ->required();
  family_cmd->add_option("--e", fam_e, "sally multiplicity (e >= 5)");
  family_cmd->add_option("--h", fam_h, "bresinsky parameter (h >= 2)");
  family_cmd->add_option("--a", fam_a, "shibuta parameter (a > 3)");
  family_cmd->add_option("--fa", fam_fa, "frobenius a");
  family_cmd->add_option("--fb", fam_fb, "frobenius b");
  family_cmd->add_option("--a1", fam_a1, "arithmetic first term");
  family_cmd->add_option("--d", fam_d, "arithmetic difference");
  family_cmd->add_option("--r", fam_r, "arithmetic length");

  auto* scan_cmd = app.add_subcommand("scan", "shifted-family scan");
  std::string scan_base;
  Int scan_kmin = -1, scan_kmax = -1;
  bool scan_betti = false;
  scan_cmd->add_option("--base", scan_base, "base sequence, e.g. 3,5,7 or 0,2,4")->required();
  scan_cmd->add_option("--kmin", scan_kmin, "first shift (default 0, or 1 when a_1 = 0)");
  scan_cmd->add_option("--kmax", scan_kmax, "last shift (default: window heuristic)");
  scan_cmd->add_flag("--betti", scan_betti, "compute Betti tables per row");

  auto* conj_cmd = app.add_subcommand("conjecture", "verify a conjecture over a window");
  std::string conj_which, conj_samples;
  Int conj_wmax = 3, conj_random = 0, conj_maxgen = 30;
  conj_cmd->add_option("which", conj_which, "width|tilde")->required();
  conj_cmd->add_option("--wmax", conj_wmax, "largest width for the width conjecture");
  conj_cmd->add_option("--samples", conj_samples, "semicolon-separated semigroups");
  conj_cmd->add_option("--random", conj_random, "number of random samples");
  conj_cmd->add_option("--max-gen", conj_maxgen, "largest generator for random samples");

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (sg_info->parsed()) return cmd_semigroup_info(cfg, sg_gens, sg_shift, out);
    if (ideal_cmd->parsed()) return cmd_ideal(cfg, ideal_gens, out);
    if (tc_cmd->parsed()) return cmd_tangentcone(cfg, tc_gens, tc_strict_lex, out);
    if (betti_cmd->parsed()) return cmd_betti(cfg, betti_gens, betti_star, out);
    if (family_cmd->parsed())
      return cmd_family(cfg, family_name, fam_e, fam_h, fam_a, fam_fa, fam_fb, fam_a1, fam_d,
                        fam_r, out, err);
    if (scan_cmd->parsed())
      return cmd_scan(cfg, scan_base, scan_kmin, scan_kmax, scan_betti, out, err);
    if (conj_cmd->parsed())
      return cmd_conjecture(cfg, conj_which, conj_wmax, conj_samples, conj_random, conj_maxgen,
                            out, err);
    err << "no subcommand\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    emit_error(err, cfg, "budget_exceeded", e.what());
    return kExitBudget;
  } catch (const OracleMismatch& e) {
    emit_error(err, cfg, "oracle_mismatch", e.what());
    return kExitMathFailure;
  } catch (const MathError& e) {
    emit_error(err, cfg, "usage", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    emit_error(err, cfg, "internal", e.what());
    return kExitMathFailure;
  }
}

}  // namespace tancone
