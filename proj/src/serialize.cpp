#include "tancone/serialize.hpp"

#include <sstream>

#include "tancone/toric.hpp"

namespace tancone {

json semigroup_to_json(const NumericalSemigroup& H) {
  return json{{"generators", H.generators()}};
}

NumericalSemigroup semigroup_from_json(const json& j) {
  return NumericalSemigroup::from_generators(j.at("generators").get<std::vector<Int>>());
}

namespace {

json rational_to_json(const Rational& q) {
  mpz_class num = q.get_num(), den = q.get_den();
  if (!num.fits_slong_p() || !den.fits_slong_p())
    return json::array({num.get_str(), den.get_str()});
  return json::array({num.get_si(), den.get_si()});
}

Rational rational_from_json(const json& j) {
  auto part = [&](const json& v) {
    return v.is_string() ? mpz_class(v.get<std::string>()) : mpz_class(v.get<long>());
  };
  Rational q(part(j.at(0)), part(j.at(1)));
  q.canonicalize();
  return q;
}

}  // namespace

json poly_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const Term& t : p.terms())
    terms.push_back(json{{"coeff", rational_to_json(t.coeff)}, {"exps", t.mono}});
  return terms;
}

Polynomial poly_from_json(const json& j, int nvars) {
  std::vector<Term> terms;
  for (const json& tj : j)
    terms.push_back(Term{rational_from_json(tj.at("coeff")), tj.at("exps").get<Exponents>()});
  return Polynomial::from_terms(nvars, std::move(terms));
}

json betti_to_json(const BettiTable& b) {
  json graded = json::object();
  for (size_t i = 0; i < b.graded.size(); ++i) {
    json layer = json::object();
    for (const auto& [deg, count] : b.graded[i]) layer[std::to_string(deg)] = count;
    graded[std::to_string(i)] = std::move(layer);
  }
  return json{{"total", b.total}, {"graded", std::move(graded)}};
}

BettiTable betti_from_json(const json& j) {
  BettiTable b;
  b.total = j.at("total").get<std::vector<Int>>();
  b.graded.resize(b.total.size());
  for (const auto& [idx, layer] : j.at("graded").items()) {
    size_t i = static_cast<size_t>(std::stoll(idx));
    if (i >= b.graded.size()) b.graded.resize(i + 1);
    for (const auto& [deg, count] : layer.items())
      b.graded[i][std::stoll(deg)] = count.get<Int>();
  }
  return b;
}

json row_to_json(const ShiftScanRow& r) {
  json j{{"k", r.k},
         {"generators", r.generators},
         {"mu_H", r.mu_H},
         {"mu_I", r.mu_I},
         {"mu_I_star", r.mu_I_star},
         {"cm", r.cm},
         {"vu_shape_ok", r.inhomogeneous_gens_shape_ok},
         {"skipped", r.skipped}};
  if (r.skipped) j["skip_reason"] = r.skip_reason;
  if (r.betti_I) j["betti_I"] = betti_to_json(*r.betti_I);
  if (r.betti_I_star) j["betti_I_star"] = betti_to_json(*r.betti_I_star);
  return j;
}

ShiftScanRow row_from_json(const json& j) {
  ShiftScanRow r;
  r.k = j.at("k").get<Int>();
  r.generators = j.at("generators").get<std::vector<Int>>();
  r.mu_H = j.at("mu_H").get<int>();
  r.mu_I = j.at("mu_I").get<int>();
  r.mu_I_star = j.at("mu_I_star").get<int>();
  r.cm = j.at("cm").get<bool>();
  r.inhomogeneous_gens_shape_ok = j.at("vu_shape_ok").get<bool>();
  r.skipped = j.at("skipped").get<bool>();
  if (j.contains("skip_reason")) r.skip_reason = j.at("skip_reason").get<std::string>();
  if (j.contains("betti_I")) r.betti_I = betti_from_json(j.at("betti_I"));
  if (j.contains("betti_I_star")) r.betti_I_star = betti_from_json(j.at("betti_I_star"));
  return r;
}

json scan_summary_json(const ScanReport& rep) {
  json j{{"schema", kSchemaTag},
         {"kind", "scan_summary"},
         {"base", rep.base},
         {"kmin", rep.kmin},
         {"kmax", rep.kmax},
         {"with_betti", rep.with_betti},
         {"rows", rep.rows.size()},
         {"verdicts", rep.verdicts}};
  j["detected_k0"] = rep.detected_k0 ? json(*rep.detected_k0) : json("not observed");
  j["detected_period"] = rep.detected_period ? json(*rep.detected_period) : json("inconclusive");
  j["period_divides_span"] = rep.period_divides_span;
  return j;
}

std::string scan_to_jsonl(const ScanReport& rep) {
  std::ostringstream os;
  os << scan_summary_json(rep).dump() << "\n";
  for (const ShiftScanRow& r : rep.rows) os << row_to_json(r).dump() << "\n";
  return os.str();
}

ScanReport scan_from_jsonl(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  ScanReport rep;
  bool have_summary = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    if (!have_summary) {
      if (j.value("kind", "") != "scan_summary") throw ParseError("missing scan summary line");
      rep.base = j.at("base").get<std::vector<Int>>();
      rep.kmin = j.at("kmin").get<Int>();
      rep.kmax = j.at("kmax").get<Int>();
      rep.with_betti = j.at("with_betti").get<bool>();
      rep.verdicts = j.at("verdicts").get<std::map<std::string, std::string>>();
      if (j.at("detected_k0").is_number()) rep.detected_k0 = j.at("detected_k0").get<Int>();
      if (j.at("detected_period").is_number())
        rep.detected_period = j.at("detected_period").get<Int>();
      rep.period_divides_span = j.at("period_divides_span").get<bool>();
      have_summary = true;
    } else {
      rep.rows.push_back(row_from_json(j));
    }
  }
  if (!have_summary) throw ParseError("empty scan report");
  return rep;
}

std::string scan_to_csv(const ScanReport& rep) {
  std::ostringstream os;
  os << "k,generators,mu_H,mu_I,mu_I_star,cm,vu_shape_ok,skipped";
  if (rep.with_betti) os << ",betti_I,betti_I_star";
  os << "\n";
  auto betti_str = [](const std::optional<BettiTable>& b) {
    if (!b) return std::string("-");
    std::ostringstream s;
    for (size_t i = 0; i < b->total.size(); ++i) s << (i ? " " : "") << b->total[i];
    return s.str();
  };
  for (const ShiftScanRow& r : rep.rows) {
    os << r.k << ",\"";
    for (size_t i = 0; i < r.generators.size(); ++i) os << (i ? "," : "") << r.generators[i];
    os << "\"," << r.mu_H << "," << r.mu_I << "," << r.mu_I_star << "," << (r.cm ? 1 : 0) << ","
       << (r.inhomogeneous_gens_shape_ok ? 1 : 0) << "," << (r.skipped ? 1 : 0);
    if (rep.with_betti) os << ",\"" << betti_str(r.betti_I) << "\",\"" << betti_str(r.betti_I_star) << "\"";
    os << "\n";
  }
  return os.str();
}

json conjecture_to_json(const ConjectureReport& rep) {
  json violations = json::array();
  for (const Violation& v : rep.violations)
    violations.push_back(json{{"witness", v.witness}, {"replay", v.replay}});
  return json{{"schema", kSchemaTag},
              {"kind", "conjecture_report"},
              {"name", rep.name},
              {"verdict", rep.verdict},
              {"instances_checked", rep.instances_checked},
              {"instances_unverified", rep.instances_unverified},
              {"violations", std::move(violations)},
              {"notes", rep.notes}};
}

json tangent_cone_to_json(const TangentCone& tc) {
  Ring ring = toric_ring(tc.H);
  auto polys = [&](const std::vector<Polynomial>& v) {
    json arr = json::array();
    for (const Polynomial& p : v) arr.push_back(p.str(ring));
    return arr;
  };
  return json{{"schema", kSchemaTag},
              {"kind", "tangent_cone"},
              {"semigroup", semigroup_to_json(tc.H)},
              {"mu_I", tc.mu_I},
              {"mu_I_star", tc.sb.mu_star},
              {"cm", tc.cm},
              {"I_gens", polys(tc.ideal_gens)},
              {"I_star_gens", polys(tc.sb.minimal_star_gens)},
              {"standard_basis", polys(tc.sb.standard_basis)},
              {"saturation_changed", tc.sb.saturation_changed},
              {"hilbert_crosscheck_dmax", tc.oracle_dmax}};
}

}  // namespace tancone
