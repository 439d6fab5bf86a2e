#include "thlab/json_io.hpp"

#include <sstream>

#include "thlab/graph_io.hpp"

namespace thlab {

void to_json(json& j, const Rational& r) { j = r.str(); }

void to_json(json& j, const Graph& g) {
  j = json{{"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}};
}

void to_json(json& j, const CloudForestWitness& w) {
  j = json{{"class", "cloud-forest"}, {"cloud", w.cloud}, {"forest", w.forest}};
}

void to_json(json& j, const CloudForestAltWitness& w) {
  j = json{{"class", "cloud-forest-alt"},
           {"set_i", w.set_i},
           {"set_j", w.set_j},
           {"forest", w.forest}};
}

void to_json(json& j, const NearAcyclicWitness& w) {
  j = json{{"class", "near-acyclic"}, {"cloud", w.independent}, {"forest", w.forest}};
}

void to_json(json& j, const RemovalSequence& w) {
  j = json{{"class", "removal"}, {"removals", w.sets}};
}

void to_json(json& j, const RNearAcyclicWitness& w) {
  j = json{{"class", "r-near-acyclic"},
           {"removals", w.removal.sets},
           {"cloud", w.remainder.independent},
           {"forest", w.remainder.forest}};
}

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

void to_json(json& j, const ClassReport& r) {
  const bool high = r.chromatic_number >= 3;
  j = json{{"chromatic_number", r.chromatic_number},
           {"cloud_forest", r.cloud_forest.has_value()},
           {"thundercloud_forest", r.thundercloud_forest.has_value()},
           {"near_acyclic", r.near_acyclic.has_value()},
           {"r_near_acyclic", high ? json(r.r_near_acyclic.has_value()) : json(nullptr)},
           {"forest_in_decomposition_family",
            high ? json(r.forest_in_decomposition_family.has_value()) : json(nullptr)}};
  json w = json::object();
  if (r.cloud_forest) w["cloud_forest"] = *r.cloud_forest;
  if (r.thundercloud_forest) {
    w["thundercloud_forest"] = *r.thundercloud_forest;
    w["thundercloud_forest"]["class"] = "thundercloud-forest";
  }
  if (r.near_acyclic) w["near_acyclic"] = *r.near_acyclic;
  if (r.r_near_acyclic) w["r_near_acyclic"] = *r.r_near_acyclic;
  if (r.forest_in_decomposition_family) {
    w["forest_in_decomposition_family"] = *r.forest_in_decomposition_family;
    w["forest_in_decomposition_family"]["class"] = "forest-in-decomposition-family";
  }
  j["witnesses"] = std::move(w);
}

void to_json(json& j, const ThresholdValue& v) {
  switch (v.kind) {
    case ThresholdValue::Kind::Exact:
      j = json{{"kind", "Exact"}, {"v", v.lo}};
      break;
    case ThresholdValue::Kind::Interval:
      j = json{{"kind", "Interval"}, {"lo", v.lo}, {"hi", v.hi}};
      break;
    case ThresholdValue::Kind::Unknown:
      j = json{{"kind", "Unknown"}};
      break;
  }
  if (!v.note.empty()) j["note"] = v.note;
}

void to_json(json& j, const Scale& s) {
  switch (s.kind) {
    case Scale::Kind::Constant: j = json{{"kind", "Constant"}}; break;
    case Scale::Kind::SubpolynomialOne: j = json{{"kind", "SubpolynomialOne"}}; break;
    case Scale::Kind::PowerOfN: j = json{{"kind", "PowerOfN"}, {"exp", s.exponent}}; break;
    case Scale::Kind::LogOverN: j = json{{"kind", "LogOverN"}}; break;
  }
}

void to_json(json& j, const PRange& r) {
  j = json::object();
  for (auto [key, end] : {std::pair{"lo", &r.lo}, std::pair{"hi", &r.hi}}) {
    if (!*end) {
      j[key] = nullptr;
      continue;
    }
    json e = (*end)->scale;
    e["strict"] = (*end)->strict;
    j[key] = std::move(e);
  }
}

void to_json(json& j, const RegimeRow& r) {
  j = json{{"range", r.range}, {"text", to_string(r.range)}, {"value", r.value}};
  j["source"] = r.source.empty() ? json(nullptr) : json(r.source);
}

void to_json(json& j, const RegimeTable& t) { j = json{{"rows", t.rows}}; }

void to_json(json& j, const ThresholdResult& r) {
  j = json{{"delta_chi", r.value},
           {"chromatic_number", r.chromatic_number},
           {"case", to_string(r.which)}};
  if (r.near_acyclic) j["witness"] = *r.near_acyclic;
  else if (r.forest_removal) j["witness"] = *r.forest_removal;
  else j["witness"] = nullptr;
}

void to_json(json& j, const Quotient& q) {
  j = q.graph;
  j["class_of"] = q.class_of;
}

void to_json(json& j, const StarThresholdResult& r) {
  j = json{{"delta_chi_star", r.value},
           {"witness_quotient", r.witness},
           {"witness_threshold", r.witness_threshold}};
}

void to_json(json& j, const ZykovSpec& s) {
  json trees = json::array();
  for (const auto& t : s.trees)
    trees.push_back({{"graph6", to_graph6(t.tree)}, {"swapped", t.swapped}});
  j = json{{"trees", std::move(trees)}, {"r", s.r}, {"t", s.t}};
}

void to_json(json& j, const ZykovRole& r) {
  const char* kind = r.kind == ZykovRole::Kind::Tree        ? "tree"
                     : r.kind == ZykovRole::Kind::Connector ? "connector"
                                                            : "universal";
  j = json{{"kind", kind}, {"index", r.index}, {"member", r.member}};
}

void to_json(json& j, const ZykovGraph& z) {
  j = z.graph;
  j["roles"] = z.roles;
}

void to_json(json& j, const TemplateGraph& t) {
  j = t.graph;
  j["set_x"] = t.set_x;
  j["set_y"] = t.set_y;
}

void to_json(json& j, const DeviationStat& s) {
  j = json{{"samples", s.samples},
           {"expected", s.expected},
           {"mean_observed", s.mean_observed},
           {"mean_relative_deviation", s.mean_relative_deviation},
           {"max_relative_deviation", s.max_relative_deviation}};
}

void to_json(json& j, const AmbientReport& r) {
  j = json{{"common_neighbourhoods", r.common_neighbourhoods},
           {"internal_edges", r.internal_edges},
           {"max_internal_edge_ratio", r.max_internal_edge_ratio},
           {"max_heavy_vertices", r.max_heavy_vertices},
           {"heavy_vertex_bound", r.heavy_vertex_bound},
           {"cross_edges", r.cross_edges}};
}

void to_json(json& j, const CompletableCount& c) {
  j = json{{"exact", c.exact},         {"total_subsets", c.total_subsets},
           {"count", c.count},         {"estimate", c.estimate},
           {"ci_low", c.ci_low},       {"ci_high", c.ci_high},
           {"z", c.z},                 {"samples", c.samples},
           {"examples", c.examples}};
}

void to_json(json& j, const LowerRegularResult& r) {
  j = json{{"holds", r.holds},
           {"exhaustive", r.exhaustive},
           {"checked", r.checked},
           {"violation_x", r.violation_x},
           {"violation_y", r.violation_y}};
}

void to_json(json& j, const TrialRecord& t) {
  j = json{{"seed", t.seed},
           {"clique_found", t.clique_found},
           {"core_edges_kept", t.core_edges_kept},
           {"min_degree", t.min_degree},
           {"min_degree_ratio", t.min_degree_ratio},
           {"chromatic_number", optional_json(t.chromatic_number)},
           {"h_free", optional_json(t.h_free)},
           {"success", t.success},
           {"notes", t.notes}};
}

void to_json(json& j, const CandidateRecord& c) {
  j = json{{"h_free", optional_json(c.h_free)},
           {"min_degree", c.min_degree},
           {"min_degree_ratio", c.min_degree_ratio},
           {"min_degree_ok", c.min_degree_ok},
           {"chromatic_number", optional_json(c.chromatic_number)},
           {"budget_errors", c.budget_errors}};
}

json experiment_summary(const ExperimentReport& r) {
  return json{{"schema", kSchemaVersion}, {"rng", r.rng},
              {"procedure", r.procedure}, {"n", r.n},
              {"p", r.p},                 {"gamma", r.gamma},
              {"seed", r.seed},           {"trials", r.trials},
              {"successes", r.successes}, {"degree_target", r.degree_target}};
}

void to_json(json& j, const ExperimentReport& r) {
  j = json{{"summary", experiment_summary(r)}, {"trials", r.per_trial}};
}

std::string to_json_lines(const ExperimentReport& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.per_trial.size(); ++i) {
    json line = r.per_trial[i];
    line["trial"] = i;
    os << line.dump() << '\n';
  }
  os << experiment_summary(r).dump() << '\n';
  return os.str();
}

ZykovSpec zykov_spec_from_json(const json& j) {
  ZykovSpec s;
  for (const auto& t : j.at("trees"))
    s.trees.push_back({parse_graph6(t.at("graph6").get<std::string>()),
                       t.value("swapped", false)});
  s.r = j.value("r", 3);
  s.t = j.value("t", 1);
  return s;
}

}  // namespace thlab
