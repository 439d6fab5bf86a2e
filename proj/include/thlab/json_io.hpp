#pragma once

#include <json.hpp>

#include "thlab/classify.hpp"
#include "thlab/constructions.hpp"
#include "thlab/random_harness.hpp"
#include "thlab/thresholds.hpp"

// JSON shapes of the library's results (nlohmann ADL hooks).  Rationals are
// strings ("p/q"), vertex sets are sorted arrays, graphs are
// {"n","m","graph6"}.

namespace thlab {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

void to_json(json& j, const Rational& r);
void to_json(json& j, const Graph& g);

void to_json(json& j, const CloudForestWitness& w);
void to_json(json& j, const CloudForestAltWitness& w);
void to_json(json& j, const NearAcyclicWitness& w);
void to_json(json& j, const RemovalSequence& w);
void to_json(json& j, const RNearAcyclicWitness& w);
void to_json(json& j, const ClassReport& r);

void to_json(json& j, const ThresholdValue& v);
void to_json(json& j, const Scale& s);
void to_json(json& j, const PRange& r);
void to_json(json& j, const RegimeRow& r);
void to_json(json& j, const RegimeTable& t);
void to_json(json& j, const ThresholdResult& r);
void to_json(json& j, const Quotient& q);
void to_json(json& j, const StarThresholdResult& r);

void to_json(json& j, const ZykovSpec& s);
void to_json(json& j, const ZykovRole& r);
void to_json(json& j, const ZykovGraph& z);
void to_json(json& j, const TemplateGraph& t);

void to_json(json& j, const DeviationStat& s);
void to_json(json& j, const AmbientReport& r);
void to_json(json& j, const CompletableCount& c);
void to_json(json& j, const LowerRegularResult& r);
void to_json(json& j, const TrialRecord& t);
void to_json(json& j, const CandidateRecord& c);

/// Summary object of an experiment (everything except the per-trial list).
json experiment_summary(const ExperimentReport& r);
void to_json(json& j, const ExperimentReport& r);  // summary plus "trials"

/// One line per trial, then the summary line.
std::string to_json_lines(const ExperimentReport& r);

/// Parses a spec object {"trees":[{"graph6":..,"swapped":..}],"r":..,"t":..}.
ZykovSpec zykov_spec_from_json(const json& j);

}  // namespace thlab
