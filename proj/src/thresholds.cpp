#include "thlab/thresholds.hpp"

#include <algorithm>
#include <map>

#include "thlab/algorithms.hpp"
#include "thlab/canonical.hpp"

namespace thlab {

const char* to_string(ThresholdCase c) {
  switch (c) {
    case ThresholdCase::Bipartite: return "bipartite";
    case ThresholdCase::NearAcyclic: return "near-acyclic";
    case ThresholdCase::NoForestInFamily: return "no-forest-in-decomposition-family";
    case ThresholdCase::ForestInFamily: return "forest-in-decomposition-family";
  }
  return "?";
}

ThresholdResult chromatic_threshold(const Graph& h, const Budget& budget) {
  if (h.size() == 0) throw DomainError("chromatic threshold needs at least one edge");
  ThresholdResult res;
  const int r = chromatic_number(h, budget);
  res.chromatic_number = r;
  if (r == 2) {
    res.value = 0;
    res.which = ThresholdCase::Bipartite;
    return res;
  }
  if (auto w = is_r_near_acyclic(h, r, budget)) {
    res.value = Rational(r - 3, r - 2);
    res.which = ThresholdCase::NearAcyclic;
    res.near_acyclic = std::move(w);
  } else if (auto f = has_forest_in_decomposition_family(h, budget)) {
    res.value = Rational(2 * r - 5, 2 * r - 3);
    res.which = ThresholdCase::ForestInFamily;
    res.forest_removal = std::move(f);
  } else {
    res.value = Rational(r - 2, r - 1);
    res.which = ThresholdCase::NoForestInFamily;
  }
  return res;
}

namespace {

class QuotientSearch {
 public:
  QuotientSearch(const Graph& h, const Budget& budget)
      : h_(h), budget_(budget), counter_(budget, "enumerate_quotients"),
        class_of_(static_cast<std::size_t>(h.order()), -1) {}

  std::vector<Quotient> run() {
    assign(0);
    std::stable_sort(found_.begin(), found_.end(), [](const Quotient& a, const Quotient& b) {
      return a.graph.order() < b.graph.order();
    });
    return std::move(found_);
  }

 private:
  // Restricted growth: vertex v joins an existing class it has no neighbour
  // in, or opens the next class.
  void assign(int v) {
    counter_.tick();
    if (v == h_.order()) {
      emit();
      return;
    }
    const VertexMask nb = h_.mask(v);
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (classes_[c] & nb) continue;
      classes_[c] |= bit(v);
      class_of_[v] = static_cast<int>(c);
      assign(v + 1);
      classes_[c] &= ~bit(v);
    }
    classes_.push_back(bit(v));
    class_of_[v] = static_cast<int>(classes_.size() - 1);
    assign(v + 1);
    classes_.pop_back();
  }

  void emit() {
    Graph q(static_cast<int>(classes_.size()));
    for (auto [u, w] : h_.edges()) {
      const int a = class_of_[u], b = class_of_[w];
      if (!q.adjacent(a, b)) q.add_edge(a, b);
    }
    if (seen_.try_emplace(canonical_form(q, budget_), found_.size()).second)
      found_.push_back({std::move(q), class_of_});
  }

  const Graph& h_;
  const Budget& budget_;
  NodeCounter counter_;
  std::vector<VertexMask> classes_;
  std::vector<int> class_of_;
  std::map<std::string, std::size_t> seen_;
  std::vector<Quotient> found_;
};

}  // namespace

std::vector<Quotient> enumerate_quotients(const Graph& h, const Budget& budget,
                                          int vertex_cap) {
  if (h.order() > vertex_cap || !h.fits_mask())
    throw DomainError("quotient enumeration is capped at " + std::to_string(vertex_cap) +
                      " vertices");
  return QuotientSearch(h, budget).run();
}

StarThresholdResult chromatic_threshold_star(const Graph& h, const Budget& budget,
                                             int vertex_cap) {
  if (h.size() == 0) throw DomainError("chromatic threshold needs at least one edge");
  auto quotients = enumerate_quotients(h, budget, vertex_cap);
  std::optional<StarThresholdResult> best;
  // Ascending size, so the first strict improvement is also the smallest
  // minimiser; nothing beats 0.
  for (auto& q : quotients) {
    ThresholdResult t = chromatic_threshold(q.graph, budget);
    if (best && !(t.value < best->value)) continue;
    best = StarThresholdResult{t.value, std::move(q), std::move(t)};
    if (best->value == Rational(0)) break;
  }
  return std::move(*best);
}

namespace {

// (band, within-band key): larger means denser.
std::pair<int, Rational> scale_key(const Scale& s) {
  switch (s.kind) {
    case Scale::Kind::Constant: return {4, 0};
    case Scale::Kind::SubpolynomialOne: return {3, 0};
    case Scale::Kind::PowerOfN:
      return {s.exponent < Rational(1) ? 2 : 0, -s.exponent};
    case Scale::Kind::LogOverN: return {1, 0};
  }
  return {0, 0};
}

std::string scale_name(const Scale& s) {
  switch (s.kind) {
    case Scale::Kind::Constant: return "1";
    case Scale::Kind::SubpolynomialOne: return "n^-o(1)";
    case Scale::Kind::PowerOfN: return "n^-" + s.exponent.str();
    case Scale::Kind::LogOverN: return "log n/n";
  }
  return "?";
}

}  // namespace

int compare(const Scale& a, const Scale& b) {
  auto ka = scale_key(a), kb = scale_key(b);
  if (ka.first != kb.first) return ka.first < kb.first ? -1 : 1;
  if (ka.second == kb.second) return 0;
  return ka.second < kb.second ? -1 : 1;
}

std::string to_string(const PRange& r) {
  if (r.lo && r.hi && r.lo == r.hi && !r.lo->strict) {
    if (r.lo->scale.kind == Scale::Kind::Constant) return "p constant";
    return "p = Theta(" + scale_name(r.lo->scale) + ")";
  }
  std::string out;
  if (r.lo) out += scale_name(r.lo->scale) + (r.lo->strict ? " << " : " <= ");
  out += "p";
  if (r.hi) out += (r.hi->strict ? " << " : " <= ") + scale_name(r.hi->scale);
  return out;
}

void validate(const RegimeTable& table) {
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const RegimeRow& row = table.rows[i];
    const std::string where = "row " + std::to_string(i) + " (" + to_string(row.range) + ")";
    for (const auto& end : {row.range.lo, row.range.hi})
      if (end && end->scale.kind == Scale::Kind::PowerOfN &&
          end->scale.exponent <= Rational(0))
        throw DomainError(where + ": power scales need a positive exponent");
    if (row.range.lo && row.range.hi) {
      const int c = compare(row.range.lo->scale, row.range.hi->scale);
      if (c > 0 || (c == 0 && (row.range.lo->strict || row.range.hi->strict)))
        throw DomainError(where + ": empty range");
    }
    if (row.value.kind != ThresholdValue::Kind::Unknown && row.source.empty())
      throw DomainError(where + ": determined value without a source");
    if (row.value.kind == ThresholdValue::Kind::Interval && row.value.hi < row.value.lo)
      throw DomainError(where + ": reversed interval");
    if (i == 0) continue;
    const RegimeRow& denser = table.rows[i - 1];
    if (!denser.range.lo || !row.range.hi)
      throw DomainError(where + ": overlaps the previous row");
    const int c = compare(row.range.hi->scale, denser.range.lo->scale);
    if (c > 0 || (c == 0 && !row.range.hi->strict && !denser.range.lo->strict))
      throw DomainError(where + ": overlaps or precedes the previous row");
  }
}

std::vector<RegimeRow> determined_rows(const RegimeTable& table) {
  std::vector<RegimeRow> out;
  for (const auto& row : table.rows) {
    if (row.value.kind == ThresholdValue::Kind::Unknown) continue;
    const bool trivial_sparse = !row.range.lo && row.range.hi &&
                                row.range.hi->scale.kind == Scale::Kind::LogOverN;
    if (!trivial_sparse) out.push_back(row);
  }
  return out;
}

namespace {

constexpr const char* kConstantSource = "constant-p equivalence";
constexpr const char* kIsolatedSource = "isolated vertices below log n/n";
constexpr const char* kBoundaryNote = "behaviour at the boundary is open";

RangeEnd strict(Scale s) { return {s, true}; }
RangeEnd loose(Scale s) { return {s, false}; }

PRange constant_range() { return {loose(Scale::constant()), loose(Scale::constant())}; }
PRange theta(Scale s) { return {loose(s), loose(s)}; }
PRange between(Scale lo, Scale hi) { return {strict(lo), strict(hi)}; }

void add_sparse_tail(RegimeTable& t) {
  t.rows.push_back({theta(Scale::log_over_n()),
                    ThresholdValue::unknown("connectivity window"), {}});
  t.rows.push_back({{std::nullopt, strict(Scale::log_over_n())},
                    ThresholdValue::exact(0), kIsolatedSource});
}

RegimeTable bipartite_table() {
  RegimeTable t;
  t.rows.push_back({constant_range(), ThresholdValue::exact(0), "bipartite graphs"});
  t.rows.push_back({between(Scale::log_over_n(), Scale::constant()),
                    ThresholdValue::exact(0), "bipartite graphs"});
  add_sparse_tail(t);
  return t;
}

bool same_graph(const Graph& h, const Graph& model, const Budget& budget) {
  return isomorphic(h, model, budget);
}

bool is_long_odd_cycle(const Graph& h, const Budget& budget) {
  const int n = h.order();
  return n >= 7 && n % 2 == 1 && h.size() == static_cast<std::size_t>(n) &&
         same_graph(h, cycle_graph(n), budget);
}

RegimeTable c5_table() {
  const Scale half = Scale::power(Rational(1, 2));
  const Scale three_quarters = Scale::power(Rational(3, 4));
  const char* src = "C5 four-regime table";
  RegimeTable t;
  t.rows.push_back({constant_range(), ThresholdValue::exact(0), src});
  t.rows.push_back({between(half, Scale::constant()), ThresholdValue::exact(Rational(1, 3)), src});
  t.rows.push_back({theta(half), ThresholdValue::unknown(kBoundaryNote), {}});
  t.rows.push_back({between(three_quarters, half), ThresholdValue::exact(Rational(1, 2)), src});
  t.rows.push_back({theta(three_quarters), ThresholdValue::unknown(kBoundaryNote), {}});
  t.rows.push_back({between(Scale::log_over_n(), three_quarters), ThresholdValue::exact(1), src});
  add_sparse_tail(t);
  return t;
}

}  // namespace

RegimeTable regime_table(const Graph& h, const Budget& budget) {
  if (h.size() == 0) throw DomainError("regime table needs at least one edge");
  const ThresholdResult thr = chromatic_threshold(h, budget);
  const int r = thr.chromatic_number;
  if (r == 2) return bipartite_table();
  if (h.order() == 5 && same_graph(h, cycle_graph(5), budget)) return c5_table();

  RegimeTable t;
  t.rows.push_back({constant_range(), ThresholdValue::exact(thr.value), kConstantSource});

  if (r >= 4) {
    const Rational m2 = two_density(h, budget);
    const Rational inv = Rational(1) / m2;
    const Rational dense_exp = std::min(inv, Rational(1, 2));
    t.rows.push_back({between(Scale::power(dense_exp), Scale::constant()),
                      ThresholdValue::exact(Rational(r - 2, r - 1)),
                      "dense range, chromatic number at least 4"});
    if (r >= 5 || m2 > Rational(2)) {
      t.rows.push_back({theta(Scale::power(inv)), ThresholdValue::unknown(kBoundaryNote), {}});
      t.rows.push_back({between(Scale::log_over_n(), Scale::power(inv)),
                        ThresholdValue::exact(1),
                        "sparse range, chromatic number at least 5 or 2-density above 2"});
    } else {
      t.rows.push_back({theta(Scale::power(Rational(1, 2))),
                        ThresholdValue::unknown(kBoundaryNote), {}});
      t.rows.push_back({between(Scale::log_over_n(), Scale::power(Rational(1, 2))),
                        ThresholdValue::unknown(
                            "4-chromatic with 2-density at most 2: the sparse formula "
                            "is suspected to fail"),
                        {}});
    }
    add_sparse_tail(t);
    return t;
  }

  // Three-chromatic: only the window n^-o(1) <= p << 1 is classified.
  const PRange window{loose(Scale::subpolynomial()), strict(Scale::constant())};
  const char* src = "3-chromatic dense window";
  if (!is_cloud_forest(h, budget)) {
    t.rows.push_back({window, ThresholdValue::exact(Rational(1, 2)), src});
  } else if (!is_thundercloud_forest(h, budget)) {
    t.rows.push_back({window, ThresholdValue::exact(Rational(1, 3)), src});
  } else if (is_long_odd_cycle(h, budget)) {
    t.rows.push_back({window, ThresholdValue::exact(0), "odd cycles of length at least 7"});
  } else {
    t.rows.push_back({window,
                      ThresholdValue::interval(0, Rational(1, 3),
                                               "conjectured to be 0 for thundercloud-forests"),
                      src});
  }
  t.rows.push_back({between(Scale::log_over_n(), Scale::subpolynomial()),
                    ThresholdValue::unknown("below the dense window"), {}});
  add_sparse_tail(t);
  return t;
}

RegimeTable regime_table_star(const Graph& h, const Budget& budget, int vertex_cap) {
  if (h.size() == 0) throw DomainError("regime table needs at least one edge");
  if (is_bipartite(h)) return bipartite_table();
  const Rational m2 = two_density(h, budget);
  RegimeTable t;
  if (m2 <= Rational(1)) {
    t.rows.push_back({{}, ThresholdValue::unknown("2-density at most 1"), {}});
    return t;
  }
  const Scale boundary = Scale::power(Rational(1) / m2);
  const StarThresholdResult star = chromatic_threshold_star(h, budget, vertex_cap);
  t.rows.push_back({{strict(boundary), loose(Scale::constant())},
                    ThresholdValue::exact(star.value),
                    "approximate version above n^-1/m2"});
  t.rows.push_back({theta(boundary), ThresholdValue::unknown(kBoundaryNote), {}});
  t.rows.push_back({between(Scale::log_over_n(), boundary), ThresholdValue::exact(1),
                    "approximate version below n^-1/m2"});
  add_sparse_tail(t);
  return t;
}

}  // namespace thlab
