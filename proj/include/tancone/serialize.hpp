#pragma once

#include <json.hpp>

#include "tancone/explorer.hpp"
#include "tancone/tangentcone.hpp"

namespace tancone {

inline constexpr const char* kSchemaTag = "tancone/v1";

using nlohmann::json;

json semigroup_to_json(const NumericalSemigroup& H);
NumericalSemigroup semigroup_from_json(const json& j);

/// [{"coeff":[num,den],"exps":[...]}, ...]
json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const json& j, int nvars);

json betti_to_json(const BettiTable& b);
BettiTable betti_from_json(const json& j);

json row_to_json(const ShiftScanRow& r);
ShiftScanRow row_from_json(const json& j);

/// One JSON object per line for the rows, prefixed by a summary line.
std::string scan_to_jsonl(const ScanReport& rep);
ScanReport scan_from_jsonl(const std::string& text);
json scan_summary_json(const ScanReport& rep);
std::string scan_to_csv(const ScanReport& rep);

json conjecture_to_json(const ConjectureReport& rep);

json tangent_cone_to_json(const TangentCone& tc);

}  // namespace tancone
