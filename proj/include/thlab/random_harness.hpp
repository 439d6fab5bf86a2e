#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "thlab/constructions.hpp"
#include "thlab/errors.hpp"
#include "thlab/graph.hpp"
#include "thlab/rational.hpp"

namespace thlab {

/// Generator identity recorded in every report.  Per-trial streams are
/// std::mt19937_64 seeded with splitmix64(seed ^ trial).
inline constexpr std::string_view kRngName = "mt19937_64/splitmix-derive/v1";

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial) noexcept;
std::mt19937_64 make_rng(std::uint64_t seed) noexcept;

/// Edge probability held exactly.  A pair is an edge when one raw 64-bit
/// draw is below round_half_even(p * 2^64); p = 1 always includes.
class Probability {
 public:
  Probability() = default;
  explicit Probability(Rational p);

  /// Decimal ("0.3") or fraction ("3/10").  ParseError / DomainError.
  static Probability parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  double to_double() const noexcept { return value_.to_double(); }
  std::string str() const { return value_.str(); }

  bool include(std::uint64_t draw) const noexcept { return always_ || draw < cutoff_; }

 private:
  Rational value_;
  std::uint64_t cutoff_ = 0;
  bool always_ = false;
};

struct GnpParams {
  int n = 0;
  Probability p;
  std::uint64_t seed = 0;
};

/// Pairs (i, j), i < j, visited in lexicographic order, one draw each.
Graph sample_gnp(const GnpParams& params);

struct DeviationStat {
  int samples = 0;
  double expected = 0;       // per sample
  double mean_observed = 0;
  double mean_relative_deviation = 0;  // |mean_observed - expected| / expected
  double max_relative_deviation = 0;   // worst single sample
};

struct AmbientReport {
  std::vector<DeviationStat> common_neighbourhoods;  // entry s-1: |S| = s vs p^s n
  DeviationStat internal_edges;                      // e(U) vs p|U|^2, |U| = ceil(pn)
  double max_internal_edge_ratio = 0;                // above 1 violates the bound
  int max_heavy_vertices = 0;  // outside U with more than 2p|U| neighbours in U
  double heavy_vertex_bound = 0;                     // log n / p^2
  DeviationStat cross_edges;                         // e(U,V) vs p|U||V|
};

/// Report-only audit of the pseudo-random properties assumed of G(n,p) in
/// the dense case, on random vertex sets drawn from `seed`.
AmbientReport check_ambient_properties(const Graph& g, double p, int set_size_cap,
                                       int sample_count, std::uint64_t seed);

/// Vertices w != v with at least d p^2 n common neighbours with v.
std::vector<int> robust_second_neighbourhood(const Graph& g, int v, const Rational& d,
                                             const Rational& p);

struct CompletableCount {
  bool exact = true;
  std::uint64_t total_subsets = 0;
  std::uint64_t count = 0;       // exact mode
  double estimate = 0;           // equals count in exact mode
  double ci_low = 0, ci_high = 0;
  double z = 5;                  // interval width in standard deviations
  std::uint64_t samples = 0;
  std::vector<std::vector<int>> examples;  // up to 8 completable sets
};

struct CompletableOptions {
  std::uint64_t exhaustive_limit = 2'000'000;  // subsets
  std::uint64_t samples = 20'000;
  std::uint64_t seed = 0;
};

/// s-subsets Z of `candidates` whose common neighbourhood has at least s
/// vertices inside N(u) and at least s inside N(v).  Exhaustive when the
/// number of subsets is within the limit, else a sampled estimate with a
/// Wilson interval.
CompletableCount count_completable(const Graph& g, int u, int v, int s,
                                   const std::vector<int>& candidates,
                                   const CompletableOptions& options = {},
                                   const Budget& budget = {});

/// Unordered pairs in U with at most gamma p^2 |W| common neighbours in W.
std::uint64_t bad_pair_count(const Graph& g, const std::vector<int>& set_u,
                             const std::vector<int>& set_w, const Rational& gamma,
                             const Rational& p);

struct LowerRegularResult {
  bool holds = true;  // sampling mode: no violation among the samples
  bool exhaustive = true;
  std::vector<int> violation_x, violation_y;
  std::uint64_t checked = 0;
};

inline constexpr int kLowerRegularExhaustiveCap = 16;

/// e(X,Y) >= (d - eps) p |X||Y| for all X in A, Y in B with |X| >= eps|A|,
/// |Y| >= eps|B|.  With samples == 0 the check is exhaustive and exact
/// (DomainError if a side exceeds 16 vertices); otherwise `samples` random
/// pairs are tried.
LowerRegularResult lower_regular_check(const Graph& g, const std::vector<int>& set_a,
                                       const std::vector<int>& set_b, const Rational& eps,
                                       const Rational& d, const Rational& p,
                                       std::uint64_t samples = 0, std::uint64_t seed = 0);

struct TrialRecord {
  std::uint64_t seed = 0;
  bool clique_found = false;
  bool core_edges_kept = false;
  int min_degree = 0;
  double min_degree_ratio = 0;  // relative to p n
  std::optional<int> chromatic_number;
  std::optional<bool> h_free;
  bool success = false;
  std::string notes;
};

/// Two-round embedding of a template into G(n,p): the first K + |Y|
/// vertices are searched for a K-clique (lexicographically first), X is
/// mapped onto it in order, Y onto the other initial vertices in order and
/// the rest identically; the kept graph is the image of the template
/// intersected with the sample.  Success: clique found and minimum degree at
/// least (delta(template)/n - gamma) p n.
TrialRecord embed_template(const TemplateGraph& tmpl, const GnpParams& params,
                           const Rational& gamma, const Budget& budget = {});

/// Same procedure, also returning the kept graph (empty if round one failed).
TrialRecord embed_template(const TemplateGraph& tmpl, const GnpParams& params,
                           const Rational& gamma, Graph& kept, const Budget& budget = {});

struct ExperimentReport {
  std::string rng = std::string(kRngName);
  std::string procedure;
  int n = 0;
  std::string p;
  std::string gamma;
  std::uint64_t seed = 0;
  int trials = 0;
  int successes = 0;
  double degree_target = 0;  // minimum degree needed per trial
  std::vector<TrialRecord> per_trial;
};

/// `trials` runs of embed_template with seeds derive_seed(seed, i).
ExperimentReport run_template_experiment(const TemplateGraph& tmpl, const Probability& p,
                                         const Rational& gamma, std::uint64_t seed,
                                         int trials, const Budget& budget = {});

struct CandidateRecord {
  std::optional<bool> h_free;
  int min_degree = 0;
  double min_degree_ratio = 0;  // relative to p n
  bool min_degree_ok = false;   // min degree >= d p n
  std::optional<int> chromatic_number;
  std::vector<std::string> budget_errors;
};

/// The three quantities a candidate counterexample is judged by.  A budget
/// overrun leaves that field empty and is listed; the rest are still filled.
CandidateRecord evaluate_candidate(const Graph& g, const Graph& h, const Rational& d,
                                   const Rational& p, const Budget& budget = {});

}  // namespace thlab
