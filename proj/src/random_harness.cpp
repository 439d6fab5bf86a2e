#include "thlab/random_harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "thlab/algorithms.hpp"

namespace thlab {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  return splitmix64(seed ^ trial);
}

std::mt19937_64 make_rng(std::uint64_t seed) noexcept { return std::mt19937_64(seed); }

namespace {

// Portable bounded draw; std distributions differ between standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t reject_below = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= reject_below) return x % bound;
  }
}

// k distinct picks from pool by partial Fisher-Yates, sorted.
std::vector<int> sample_subset(std::mt19937_64& rng, std::vector<int> pool, int k) {
  const int n = static_cast<int>(pool.size());
  k = std::min(k, n);
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(k));
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<int> iota_vector(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

Probability::Probability(Rational p) : value_(p) {
  if (p < Rational(0) || p > Rational(1)) throw DomainError("probability outside [0,1]");
  if (p == Rational(1)) {
    always_ = true;
    return;
  }
  using u128 = unsigned __int128;
  const u128 num = static_cast<u128>(static_cast<std::uint64_t>(p.numerator())) << 64;
  const u128 den = static_cast<u128>(static_cast<std::uint64_t>(p.denominator()));
  u128 q = num / den;
  const u128 rem = num % den;
  if (2 * rem > den || (2 * rem == den && (q & 1))) ++q;
  if (q >> 64)
    always_ = true;
  else
    cutoff_ = static_cast<std::uint64_t>(q);
}

Probability Probability::parse(std::string_view text) {
  return Probability(Rational::parse(text));
}

Graph sample_gnp(const GnpParams& params) {
  if (params.n < 0) throw DomainError("sample_gnp needs n >= 0");
  auto rng = make_rng(params.seed);
  Graph g(params.n);
  for (int i = 0; i < params.n; ++i)
    for (int j = i + 1; j < params.n; ++j)
      if (params.p.include(rng())) g.add_edge(i, j);
  return g;
}

namespace {

class StatAccumulator {
 public:
  explicit StatAccumulator(double expected) { stat_.expected = expected; }

  void add(double observed) {
    ++stat_.samples;
    sum_ += observed;
    stat_.max_relative_deviation =
        std::max(stat_.max_relative_deviation, relative(observed));
  }

  DeviationStat finish() {
    if (stat_.samples > 0) {
      stat_.mean_observed = sum_ / stat_.samples;
      stat_.mean_relative_deviation = relative(stat_.mean_observed);
    }
    return stat_;
  }

 private:
  double relative(double observed) const {
    if (stat_.expected == 0) return observed == 0 ? 0 : INFINITY;
    return std::abs(observed - stat_.expected) / stat_.expected;
  }

  DeviationStat stat_;
  double sum_ = 0;
};

int count_in(const Graph& g, int v, const std::vector<char>& member) {
  int c = 0;
  for (int w : g.neighbours(v)) c += member[w];
  return c;
}

}  // namespace

AmbientReport check_ambient_properties(const Graph& g, double p, int set_size_cap,
                                       int sample_count, std::uint64_t seed) {
  const int n = g.order();
  AmbientReport rep;
  auto rng = make_rng(seed);
  const auto everyone = iota_vector(n);

  for (int s = 1; s <= std::min(set_size_cap, n); ++s) {
    StatAccumulator acc(std::pow(p, s) * n);
    for (int k = 0; k < sample_count; ++k) {
      const auto set = sample_subset(rng, everyone, s);
      std::vector<int> count(static_cast<std::size_t>(n), 0);
      for (int v : set)
        for (int w : g.neighbours(v)) ++count[w];
      acc.add(static_cast<double>(std::count(count.begin(), count.end(), s)));
    }
    rep.common_neighbourhoods.push_back(acc.finish());
  }

  const int u_size = std::min(n / 2, static_cast<int>(std::ceil(p * n)));
  if (u_size >= 1) {
    StatAccumulator inner(p * u_size * u_size);
    StatAccumulator cross(p * u_size * u_size);
    rep.heavy_vertex_bound = p > 0 ? std::log(static_cast<double>(n)) / (p * p) : INFINITY;
    for (int k = 0; k < sample_count; ++k) {
      std::vector<char> in_u(static_cast<std::size_t>(n), 0), in_v(static_cast<std::size_t>(n), 0);
      std::vector<int> rest;
      for (int v : sample_subset(rng, everyone, u_size)) in_u[v] = 1;
      for (int v = 0; v < n; ++v)
        if (!in_u[v]) rest.push_back(v);
      for (int v : sample_subset(rng, rest, u_size)) in_v[v] = 1;

      double inside = 0, between = 0;
      int heavy = 0;
      for (int v = 0; v < n; ++v) {
        const int to_u = count_in(g, v, in_u);
        if (in_u[v]) {
          inside += to_u;
          between += count_in(g, v, in_v);
        } else if (to_u > 2 * p * u_size) {
          ++heavy;
        }
      }
      inside /= 2;
      inner.add(inside);
      cross.add(between);
      if (p > 0)
        rep.max_internal_edge_ratio =
            std::max(rep.max_internal_edge_ratio, inside / (p * u_size * u_size));
      rep.max_heavy_vertices = std::max(rep.max_heavy_vertices, heavy);
    }
    rep.internal_edges = inner.finish();
    rep.cross_edges = cross.finish();
  }
  return rep;
}

std::vector<int> robust_second_neighbourhood(const Graph& g, int v, const Rational& d,
                                             const Rational& p) {
  if (v < 0 || v >= g.order()) throw DomainError("vertex out of range");
  const Rational need = d * p * p * Rational(g.order());
  auto row = g.row(v);
  std::vector<int> out;
  for (int w = 0; w < g.order(); ++w) {
    if (w == v) continue;
    auto other = g.row(w);
    std::int64_t common = 0;
    for (std::size_t x = 0; x < row.size(); ++x) common += std::popcount(row[x] & other[x]);
    if (Rational(common) >= need) out.push_back(w);
  }
  return out;
}

namespace {

using Words = std::vector<std::uint64_t>;

Words words_of(const Graph& g, std::span<const int> vertices) {
  Words w(static_cast<std::size_t>(g.words()), 0);
  for (int v : vertices) w[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
  return w;
}

int common_count(const Words& a, std::span<const std::uint64_t> b) {
  int c = 0;
  for (std::size_t x = 0; x < a.size(); ++x) c += std::popcount(a[x] & b[x]);
  return c;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  unsigned __int128 c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace

CompletableCount count_completable(const Graph& g, int u, int v, int s,
                                   const std::vector<int>& candidates,
                                   const CompletableOptions& options, const Budget& budget) {
  if (u == v) throw DomainError("count_completable needs u != v");
  if (s < 1) throw DomainError("count_completable needs s >= 1");
  const auto nu = g.row(u);
  const auto nv = g.row(v);
  const int k = static_cast<int>(candidates.size());
  CompletableCount res;
  res.total_subsets = binomial(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(s));

  const Words everyone = words_of(g, iota_vector(g.order()));
  auto completable = [&](std::span<const int> z) {
    Words common = everyone;
    for (int w : z) {
      auto row = g.row(w);
      for (std::size_t x = 0; x < common.size(); ++x) common[x] &= row[x];
    }
    return common_count(common, nu) >= s && common_count(common, nv) >= s;
  };

  if (res.total_subsets <= options.exhaustive_limit) {
    NodeCounter counter(budget, "count_completable");
    std::vector<int> idx(static_cast<std::size_t>(s));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> z(static_cast<std::size_t>(s));
    if (s <= k) {
      while (true) {
        counter.tick();
        for (int i = 0; i < s; ++i) z[i] = candidates[static_cast<std::size_t>(idx[i])];
        if (completable(z)) {
          ++res.count;
          if (res.examples.size() < 8) res.examples.push_back(z);
        }
        int i = s - 1;
        while (i >= 0 && idx[i] == k - s + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    res.estimate = res.ci_low = res.ci_high = static_cast<double>(res.count);
    return res;
  }

  res.exact = false;
  auto rng = make_rng(options.seed);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    const auto z = sample_subset(rng, candidates, s);
    if (completable(z)) {
      ++hits;
      if (res.examples.size() < 8) res.examples.push_back(z);
    }
  }
  res.samples = options.samples;
  const double m = static_cast<double>(options.samples);
  const double phat = m > 0 ? hits / m : 0;
  const double z2 = res.z * res.z;
  const double centre = (phat + z2 / (2 * m)) / (1 + z2 / m);
  const double half = res.z * std::sqrt(phat * (1 - phat) / m + z2 / (4 * m * m)) / (1 + z2 / m);
  const double total = static_cast<double>(res.total_subsets);
  res.estimate = phat * total;
  // The Wilson interval contains phat; rounding near 0 and 1 can nudge it out.
  res.ci_low = std::min(std::max(0.0, centre - half) * total, res.estimate);
  res.ci_high = std::max(std::min(1.0, centre + half) * total, res.estimate);
  return res;
}

std::uint64_t bad_pair_count(const Graph& g, const std::vector<int>& set_u,
                             const std::vector<int>& set_w, const Rational& gamma,
                             const Rational& p) {
  const Words w = words_of(g, set_w);
  for (int x : set_u)
    if ((w[static_cast<std::size_t>(x >> 6)] >> (x & 63)) & 1)
      throw DomainError("bad_pair_count needs disjoint U and W");
  const Rational limit = gamma * p * p * Rational(static_cast<std::int64_t>(set_w.size()));
  std::uint64_t bad = 0;
  for (std::size_t i = 0; i < set_u.size(); ++i) {
    Words nw = w;
    auto ri = g.row(set_u[i]);
    for (std::size_t x = 0; x < nw.size(); ++x) nw[x] &= ri[x];
    for (std::size_t j = i + 1; j < set_u.size(); ++j)
      if (Rational(common_count(nw, g.row(set_u[j]))) <= limit) ++bad;
  }
  return bad;
}

LowerRegularResult lower_regular_check(const Graph& g, const std::vector<int>& set_a,
                                       const std::vector<int>& set_b, const Rational& eps,
                                       const Rational& d, const Rational& p,
                                       std::uint64_t samples, std::uint64_t seed) {
  const int na = static_cast<int>(set_a.size());
  const int nb = static_cast<int>(set_b.size());
  const int min_x = static_cast<int>((eps * Rational(na)).ceil());
  const int min_y = static_cast<int>((eps * Rational(nb)).ceil());
  const Rational density = (d - eps) * p;
  LowerRegularResult res;

  // deg[j]: neighbours of set_b[j] inside X.
  auto degrees_into = [&](const std::vector<int>& xs) {
    std::vector<int> deg(static_cast<std::size_t>(nb), 0);
    for (int j = 0; j < nb; ++j)
      for (int x : xs) deg[j] += g.adjacent(x, set_b[static_cast<std::size_t>(j)]);
    return deg;
  };
  auto violates = [&](std::int64_t edges, int sx, int sy) {
    return Rational(edges) < density * Rational(sx) * Rational(sy);
  };

  if (samples == 0) {
    if (na > kLowerRegularExhaustiveCap || nb > kLowerRegularExhaustiveCap)
      throw DomainError("exhaustive lower-regularity check is capped at 16 vertices per side");
    for (std::uint32_t xm = 0; xm < (1U << na); ++xm) {
      const int sx = std::popcount(xm);
      if (sx < min_x) continue;
      std::vector<int> xs;
      for (int i = 0; i < na; ++i)
        if ((xm >> i) & 1) xs.push_back(set_a[static_cast<std::size_t>(i)]);
      const auto deg = degrees_into(xs);
      // For each |Y| the sparsest Y takes the lowest degrees into X.
      std::vector<int> by_degree(static_cast<std::size_t>(nb));
      std::iota(by_degree.begin(), by_degree.end(), 0);
      std::stable_sort(by_degree.begin(), by_degree.end(),
                       [&](int a, int b) { return deg[a] < deg[b]; });
      std::int64_t edges = 0;
      for (int sy = 1; sy <= nb; ++sy) {
        edges += deg[by_degree[sy - 1]];
        if (sy < min_y) continue;
        ++res.checked;
        if (violates(edges, sx, sy)) {
          res.holds = false;
          res.violation_x = xs;
          for (int i = 0; i < sy; ++i) res.violation_y.push_back(set_b[by_degree[i]]);
          std::sort(res.violation_y.begin(), res.violation_y.end());
          return res;
        }
      }
    }
    return res;
  }

  res.exhaustive = false;
  auto rng = make_rng(seed);
  for (std::uint64_t k = 0; k < samples; ++k) {
    const int sx = min_x + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(na - min_x + 1)));
    const int sy = min_y + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(nb - min_y + 1)));
    const auto xs = sample_subset(rng, set_a, sx);
    const auto ys = sample_subset(rng, set_b, sy);
    std::int64_t edges = 0;
    for (int x : xs)
      for (int y : ys) edges += g.adjacent(x, y);
    ++res.checked;
    if (violates(edges, sx, sy)) {
      res.holds = false;
      res.violation_x = xs;
      res.violation_y = ys;
      return res;
    }
  }
  return res;
}

TrialRecord embed_template(const TemplateGraph& tmpl, const GnpParams& params,
                           const Rational& gamma, Graph& kept, const Budget& budget) {
  validate_template(tmpl);
  const int n = tmpl.graph.order();
  if (params.n != n) throw DomainError("embed_template: template order differs from n");
  const int k = static_cast<int>(tmpl.set_x.size());
  const int initial = k + static_cast<int>(tmpl.set_y.size());
  if (k < 1 || initial > n) throw DomainError("embed_template: need 1 <= K and K + |Y| <= n");

  TrialRecord rec;
  rec.seed = params.seed;
  kept = Graph(0);
  // Pairs are independent, so drawing all of them up front and revealing the
  // initial block first is the same experiment as two exposure rounds.
  const Graph sample = sample_gnp(params);

  const auto clique = find_clique_within(sample, iota_vector(initial), k, budget);
  if (!clique) {
    rec.notes = "round 1: no K-clique among the initial vertices";
    return rec;
  }
  rec.clique_found = true;

  std::vector<int> phi(static_cast<std::size_t>(n), -1);
  std::vector<char> in_clique(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < k; ++i) {
    phi[tmpl.set_x[static_cast<std::size_t>(i)]] = (*clique)[static_cast<std::size_t>(i)];
    in_clique[(*clique)[static_cast<std::size_t>(i)]] = 1;
  }
  int next_initial = 0;
  for (int y : tmpl.set_y) {
    while (in_clique[next_initial]) ++next_initial;
    phi[y] = next_initial++;
  }
  int next_rest = initial;
  for (int v = 0; v < n; ++v)
    if (phi[v] < 0) phi[v] = next_rest++;

  kept = Graph(n);
  for (auto [a, b] : tmpl.graph.edges())
    if (sample.adjacent(phi[a], phi[b])) kept.add_edge(phi[a], phi[b]);

  rec.core_edges_kept = true;
  for (int a : tmpl.set_x)
    for (int b : tmpl.set_x)
      if (a < b && tmpl.graph.adjacent(a, b) && !kept.adjacent(phi[a], phi[b]))
        rec.core_edges_kept = false;

  rec.min_degree = kept.min_degree();
  const double pn = params.p.to_double() * n;
  rec.min_degree_ratio = pn > 0 ? rec.min_degree / pn : 0;
  const Rational target =
      (Rational(tmpl.graph.min_degree()) - gamma * Rational(n)) * params.p.value();
  rec.success = rec.core_edges_kept && Rational(rec.min_degree) >= target;
  if (!rec.success) rec.notes = "round 2: minimum degree below target";
  return rec;
}

TrialRecord embed_template(const TemplateGraph& tmpl, const GnpParams& params,
                           const Rational& gamma, const Budget& budget) {
  Graph kept;
  return embed_template(tmpl, params, gamma, kept, budget);
}

ExperimentReport run_template_experiment(const TemplateGraph& tmpl, const Probability& p,
                                         const Rational& gamma, std::uint64_t seed,
                                         int trials, const Budget& budget) {
  ExperimentReport rep;
  rep.procedure = "two-round template embedding";
  rep.n = tmpl.graph.order();
  rep.p = p.str();
  rep.gamma = gamma.str();
  rep.seed = seed;
  rep.trials = trials;
  rep.degree_target =
      ((Rational(tmpl.graph.min_degree()) - gamma * Rational(rep.n)) * p.value()).to_double();
  for (int i = 0; i < trials; ++i) {
    GnpParams params{rep.n, p, derive_seed(seed, static_cast<std::uint64_t>(i))};
    rep.per_trial.push_back(embed_template(tmpl, params, gamma, budget));
    rep.successes += rep.per_trial.back().success;
  }
  return rep;
}

CandidateRecord evaluate_candidate(const Graph& g, const Graph& h, const Rational& d,
                                   const Rational& p, const Budget& budget) {
  CandidateRecord rec;
  const int n = g.order();
  rec.min_degree = n > 0 ? g.min_degree() : 0;
  const double pn = p.to_double() * n;
  rec.min_degree_ratio = pn > 0 ? rec.min_degree / pn : 0;
  rec.min_degree_ok = Rational(rec.min_degree) >= d * p * Rational(n);
  try {
    rec.h_free = !contains_subgraph(g, h, budget).has_value();
  } catch (const BudgetExceeded& e) {
    rec.budget_errors.push_back(e.what());
  }
  try {
    rec.chromatic_number = chromatic_number(g, budget);
  } catch (const BudgetExceeded& e) {
    rec.budget_errors.push_back(e.what());
  }
  return rec;
}

}  // namespace thlab
