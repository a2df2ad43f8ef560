#include "circlab/report_json.hpp"

#include <limits>

#include "circlab/error.hpp"

namespace circlab {

using Json = nlohmann::ordered_json;

Json group_order_to_json(GroupOrder v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return Json(static_cast<std::uint64_t>(v));
  return Json(to_string(v));
}

GroupOrder group_order_from_json(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) return static_cast<GroupOrder>(j.get<std::int64_t>());
  GroupOrder v = 0;
  for (char c : j.get<std::string>()) {
    if (c < '0' || c > '9') throw Error(ErrorCode::precondition, "bad group order string");
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  return v;
}

Json to_json(const Decomposition& d) {
  Json j;
  j["b"] = d.b;
  j["complete_factor_orders"] = d.complete_factor_orders;
  j["gamma0"] = {{"n", d.gamma0.order()}, {"S", d.gamma0.connection_set().elements()}};
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  d.b = j.at("b").get<Int>();
  d.complete_factor_orders = j.at("complete_factor_orders").get<std::vector<Int>>();
  d.gamma0 = make(j.at("gamma0").at("n").get<Int>(), j.at("gamma0").at("S").get<std::vector<Int>>());
  return d;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["n"] = r.n;
  j["S"] = r.s;
  j["connected"] = r.connected;
  j["undirected"] = r.undirected;
  j["arc_transitive"] = r.arc_transitive;
  j["all_full_order"] = r.all_full_order;
  j["multiplier_transitive"] = r.multiplier_transitive;
  j["normal_arc_transitive"] = r.normal_arc_transitive;
  j["contains_full_coset"] = r.contains_full_coset;
  j["contains_punctured_coset_ge4"] = r.contains_punctured_coset_ge4;
  j["c_normal_oracle"] = r.c_normal_oracle;
  if (r.normal_circulant_oracle) {
    j["normal_circulant_oracle"] = *r.normal_circulant_oracle;
  } else {
    j["normal_circulant_oracle"] = "partial";
  }
  j["decomposition"] = r.decomposition ? to_json(*r.decomposition) : Json(nullptr);
  j["aut_order"] = group_order_to_json(r.aut_order);
  j["normalizer_order"] = r.normalizer_order;
  return j;
}

ClassificationReport classification_from_json(const Json& j) {
  ClassificationReport r;
  r.n = j.at("n").get<Int>();
  r.s = j.at("S").get<std::vector<Int>>();
  r.connected = j.at("connected").get<bool>();
  r.undirected = j.at("undirected").get<bool>();
  r.arc_transitive = j.at("arc_transitive").get<bool>();
  r.all_full_order = j.at("all_full_order").get<bool>();
  r.multiplier_transitive = j.at("multiplier_transitive").get<bool>();
  r.normal_arc_transitive = j.at("normal_arc_transitive").get<bool>();
  r.contains_full_coset = j.at("contains_full_coset").get<bool>();
  r.contains_punctured_coset_ge4 = j.at("contains_punctured_coset_ge4").get<bool>();
  r.c_normal_oracle = j.at("c_normal_oracle").get<bool>();
  const auto& oracle = j.at("normal_circulant_oracle");
  if (oracle.is_boolean()) r.normal_circulant_oracle = oracle.get<bool>();
  if (!j.at("decomposition").is_null()) r.decomposition = decomposition_from_json(j.at("decomposition"));
  r.aut_order = group_order_from_json(j.at("aut_order"));
  r.normalizer_order = j.at("normalizer_order").get<Int>();
  return r;
}

Json to_json(const AgreementReport& r) {
  Json j;
  j["n_max"] = r.n_max;
  j["arc_transitive_only"] = r.arc_transitive_only;
  j["prime_power_max"] = r.prime_power_max;
  Json instances = Json::array();
  for (const auto& c : r.instances) {
    instances.push_back({{"n", c.n},
                         {"classified", c.classified},
                         {"arc_transitive", c.arc_transitive},
                         {"partial_oracle", c.partial_oracle}});
  }
  j["instances"] = std::move(instances);
  Json tallies = Json::array();
  Json verdicts = Json::object();
  for (const auto& t : r.tallies) {
    Json cx = Json::array();
    for (const auto& c : t.counterexamples) cx.push_back({{"n", c.n}, {"S", c.s}, {"evidence", c.evidence}});
    tallies.push_back({{"name", t.name},
                       {"claim", t.claim},
                       {"checked", t.checked},
                       {"agreements", t.agreements},
                       {"agreement_percent", t.agreement_percent()},
                       {"counterexamples", std::move(cx)}});
    verdicts[t.name] = t.counterexamples.empty() ? "vindicated" : "refuted";
  }
  j["tallies"] = std::move(tallies);
  j["verdicts"] = std::move(verdicts);
  return j;
}

AgreementReport agreement_from_json(const Json& j) {
  AgreementReport r;
  r.n_max = j.at("n_max").get<Int>();
  r.arc_transitive_only = j.at("arc_transitive_only").get<bool>();
  r.prime_power_max = j.at("prime_power_max").get<Int>();
  for (const auto& c : j.at("instances")) {
    r.instances.push_back(InstanceCount{c.at("n").get<Int>(), c.at("classified").get<Int>(),
                                        c.at("arc_transitive").get<Int>(), c.at("partial_oracle").get<Int>()});
  }
  for (const auto& t : j.at("tallies")) {
    Tally tally{t.at("name").get<std::string>(), t.at("claim").get<std::string>(), t.at("checked").get<Int>(),
                t.at("agreements").get<Int>(), {}};
    for (const auto& c : t.at("counterexamples")) {
      tally.counterexamples.push_back(
          Counterexample{c.at("n").get<Int>(), c.at("S").get<std::vector<Int>>(), c.at("evidence")});
    }
    r.tallies.push_back(std::move(tally));
  }
  return r;
}

}  // namespace circlab
