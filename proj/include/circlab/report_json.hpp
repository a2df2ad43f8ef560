#pragma once

// JSON shapes for reports. Field names follow the struct members.
//
// ClassificationReport:
//   {"n", "S": [..], "connected", "undirected", "arc_transitive",
//    "all_full_order", "multiplier_transitive", "normal_arc_transitive",
//    "contains_full_coset", "contains_punctured_coset_ge4", "c_normal_oracle",
//    "normal_circulant_oracle": true | false | "partial",
//    "decomposition": null | {"b", "complete_factor_orders": [..],
//                             "gamma0": {"n", "S": [..]}},
//    "aut_order", "normalizer_order"}
//
// Group orders are JSON numbers when they fit in 64 bits and decimal strings
// otherwise.

#include <json.hpp>

#include "circlab/classify.hpp"
#include "circlab/verify.hpp"

namespace circlab {

nlohmann::ordered_json group_order_to_json(GroupOrder v);
GroupOrder group_order_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const ClassificationReport& r);
ClassificationReport classification_from_json(const nlohmann::ordered_json& j);

/// {"n_max", "arc_transitive_only", "prime_power_max", "instances": [..],
///  "tallies": [{"name", "claim", "checked", "agreements",
///               "agreement_percent", "counterexamples": [{"n", "S",
///               "evidence"}]}],
///  "verdicts": {name: "vindicated" | "refuted"}}
nlohmann::ordered_json to_json(const AgreementReport& r);
AgreementReport agreement_from_json(const nlohmann::ordered_json& j);

}  // namespace circlab
