#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thlab/classify.hpp"
#include "thlab/errors.hpp"
#include "thlab/graph.hpp"
#include "thlab/rational.hpp"

namespace thlab {

/// Threshold value of a regime row: an exact rational, an interval known to
/// contain it, or unknown with an explanation.
struct ThresholdValue {
  enum class Kind { Exact, Interval, Unknown };

  Kind kind = Kind::Unknown;
  Rational lo;  // Exact: the value
  Rational hi;  // Exact: equal to lo
  std::string note;

  static ThresholdValue exact(Rational v) { return {Kind::Exact, v, v, {}}; }
  static ThresholdValue interval(Rational lo, Rational hi, std::string note = {}) {
    return {Kind::Interval, lo, hi, std::move(note)};
  }
  static ThresholdValue unknown(std::string note) {
    return {Kind::Unknown, 0, 0, std::move(note)};
  }

  friend bool operator==(const ThresholdValue&, const ThresholdValue&) = default;
};

/// Which branch of the three-way classification produced delta_chi.
enum class ThresholdCase {
  Bipartite,          // 0
  NearAcyclic,        // (r-3)/(r-2)
  NoForestInFamily,   // (r-2)/(r-1)
  ForestInFamily,     // (2r-5)/(2r-3)
};

const char* to_string(ThresholdCase c);

struct ThresholdResult {
  Rational value;
  int chromatic_number = 0;
  ThresholdCase which = ThresholdCase::Bipartite;
  std::optional<RNearAcyclicWitness> near_acyclic;
  std::optional<RemovalSequence> forest_removal;
};

/// delta_chi(h) by the three-way classification on r = chi(h).  DomainError
/// if h has no edges.
ThresholdResult chromatic_threshold(const Graph& h, const Budget& budget = {});

/// Quotient of h by a partition into independent classes; class_of[v] is
/// the quotient vertex of v.
struct Quotient {
  Graph graph;
  std::vector<int> class_of;
};

inline constexpr int kDefaultQuotientVertexCap = 12;

/// Every quotient of h by a partition into independent classes, one per
/// isomorphism class, ordered by number of classes and then by discovery in
/// a restricted-growth enumeration of the partitions.  Includes h itself.
/// DomainError if order() exceeds vertex_cap.
std::vector<Quotient> enumerate_quotients(const Graph& h, const Budget& budget = {},
                                          int vertex_cap = kDefaultQuotientVertexCap);

struct StarThresholdResult {
  Rational value;
  Quotient witness;            // a minimiser with as few vertices as possible
  ThresholdResult witness_threshold;
};

/// delta*_chi(h): the least delta_chi over the quotients of h.
StarThresholdResult chromatic_threshold_star(const Graph& h, const Budget& budget = {},
                                             int vertex_cap = kDefaultQuotientVertexCap);

// Symbolic edge-probability scales, densest first: constant, n^{-o(1)},
// n^{-e}, log n / n.
struct Scale {
  enum class Kind { Constant, SubpolynomialOne, PowerOfN, LogOverN };
  Kind kind = Kind::Constant;
  Rational exponent;  // PowerOfN only: the scale is n^{-exponent}

  static Scale constant() { return {Kind::Constant, 0}; }
  static Scale subpolynomial() { return {Kind::SubpolynomialOne, 0}; }
  static Scale power(Rational e) { return {Kind::PowerOfN, e}; }
  static Scale log_over_n() { return {Kind::LogOverN, 0}; }

  friend bool operator==(const Scale&, const Scale&) = default;
};

/// Asymptotic order of two scales: negative when a << b.
int compare(const Scale& a, const Scale& b);

/// One end of a p-range.  A strict end means p is separated from the scale
/// (p >> lo or p << hi); a non-strict end admits p of that order.
struct RangeEnd {
  Scale scale;
  bool strict = true;
  friend bool operator==(const RangeEnd&, const RangeEnd&) = default;
};

/// Missing ends are unbounded (p > 0 below, p <= 1 above).
struct PRange {
  std::optional<RangeEnd> lo;
  std::optional<RangeEnd> hi;
  friend bool operator==(const PRange&, const PRange&) = default;
};

std::string to_string(const PRange& r);

struct RegimeRow {
  PRange range;
  ThresholdValue value;
  std::string source;
};

struct RegimeTable {
  std::vector<RegimeRow> rows;  // densest range first
};

/// Rows are non-empty, pairwise disjoint and ordered from dense to sparse,
/// and every determined row names its source.  Throws DomainError
/// describing the first violation.
void validate(const RegimeTable& table);

/// Exact and interval rows other than the trivial p << log n / n row.
std::vector<RegimeRow> determined_rows(const RegimeTable& table);

RegimeTable regime_table(const Graph& h, const Budget& budget = {});
RegimeTable regime_table_star(const Graph& h, const Budget& budget = {},
                              int vertex_cap = kDefaultQuotientVertexCap);

}  // namespace thlab
