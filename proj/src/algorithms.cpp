#include "thlab/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <stdexcept>
#include <numeric>
#include <string>

namespace thlab {
namespace {

// Greedy clique: from every start vertex, repeatedly add the candidate with
// the most neighbours among the remaining candidates.
std::vector<int> greedy_clique(const Graph& g) {
  std::vector<int> best;
  const int n = g.order();
  const int words = g.words();
  std::vector<std::uint64_t> cand(static_cast<std::size_t>(words));
  for (int start = 0; start < n; ++start) {
    std::vector<int> clique{start};
    auto r = g.row(start);
    std::copy(r.begin(), r.end(), cand.begin());
    while (true) {
      int pick = -1;
      int pick_score = -1;
      for (int w = 0; w < words; ++w) {
        std::uint64_t bits = cand[static_cast<std::size_t>(w)];
        while (bits) {
          int v = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          int score = 0;
          auto rv = g.row(v);
          for (int x = 0; x < words; ++x)
            score += std::popcount(rv[static_cast<std::size_t>(x)] &
                                   cand[static_cast<std::size_t>(x)]);
          if (score > pick_score) {
            pick_score = score;
            pick = v;
          }
        }
      }
      if (pick < 0) break;
      clique.push_back(pick);
      auto rp = g.row(pick);
      for (int x = 0; x < words; ++x)
        cand[static_cast<std::size_t>(x)] &= rp[static_cast<std::size_t>(x)];
    }
    if (clique.size() > best.size()) best = clique;
  }
  return best;
}

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, const Budget& budget)
      : g_(g), n_(g.order()), counter_(budget, "chromatic_number") {
    adj_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbours(v);
  }

  // Searches for a colouring with fewer than `limit` colours, stopping as
  // soon as one with at most `target` colours is known.
  void run(int limit, int target) {
    best_k_ = limit;
    target_ = target;
    max_colors_ = std::max(limit, 1);
    color_.assign(static_cast<std::size_t>(n_), -1);
    sat_.assign(static_cast<std::size_t>(n_), 0);
    count_.assign(static_cast<std::size_t>(n_) * max_colors_, 0);
    int used = 0;
    int colored = 0;
    for (int v : greedy_clique(g_)) {
      if (used + 1 > max_colors_) break;
      assign(v, used++);
      ++colored;
    }
    if (used < best_k_) search(colored, used);
  }

  int best_k() const { return best_k_; }
  const std::vector<int>& best_coloring() const { return best_; }

 private:
  void assign(int v, int c) {
    color_[v] = c;
    for (int w : adj_[v])
      if (count_[static_cast<std::size_t>(w) * max_colors_ + c]++ == 0) ++sat_[w];
  }

  void unassign(int v) {
    int c = color_[v];
    color_[v] = -1;
    for (int w : adj_[v])
      if (--count_[static_cast<std::size_t>(w) * max_colors_ + c] == 0) --sat_[w];
  }

  void search(int colored, int used) {
    counter_.tick();
    if (used >= best_k_) return;
    if (colored == n_) {
      best_k_ = used;
      best_ = color_;
      return;
    }
    int v = -1;
    for (int u = 0; u < n_; ++u) {
      if (color_[u] >= 0) continue;
      if (v < 0 || sat_[u] > sat_[v] ||
          (sat_[u] == sat_[v] && adj_[u].size() > adj_[v].size()))
        v = u;
    }
    for (int c = 0; c < used; ++c) {
      if (count_[static_cast<std::size_t>(v) * max_colors_ + c] != 0) continue;
      assign(v, c);
      search(colored + 1, used);
      unassign(v);
      if (best_k_ <= target_) return;
    }
    if (used + 1 < best_k_ && used + 1 <= max_colors_) {
      assign(v, used);
      search(colored + 1, used + 1);
      unassign(v);
    }
  }

  const Graph& g_;
  int n_;
  NodeCounter counter_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> color_;
  std::vector<int> sat_;
  std::vector<int> count_;
  std::vector<int> best_;
  int best_k_ = 0;
  int target_ = 0;
  int max_colors_ = 1;
};

// Greedy DSATUR colouring, used as the initial upper bound.
std::vector<int> dsatur_greedy(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<char>> seen(static_cast<std::size_t>(n),
                                      std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  std::vector<int> sat(static_cast<std::size_t>(n), 0);
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (color[u] >= 0) continue;
      if (v < 0 || sat[u] > sat[v] || (sat[u] == sat[v] && deg[u] > deg[v])) v = u;
    }
    int c = 0;
    while (seen[v][c]) ++c;
    color[v] = c;
    for (int w : g.neighbours(v))
      if (!seen[w][c]) {
        seen[w][c] = 1;
        ++sat[w];
      }
  }
  return color;
}

int colors_used(const std::vector<int>& coloring) {
  int k = 0;
  for (int c : coloring) k = std::max(k, c + 1);
  return k;
}

}  // namespace

std::vector<int> optimal_coloring(const Graph& g, const Budget& budget) {
  if (g.order() == 0) return {};
  auto greedy = dsatur_greedy(g);
  const int upper = colors_used(greedy);
  const int lower = static_cast<int>(greedy_clique(g).size());
  if (upper <= lower) return greedy;
  ColoringSearch search(g, budget);
  search.run(upper, lower);
  return search.best_k() < upper ? search.best_coloring() : greedy;
}

int chromatic_number(const Graph& g, const Budget& budget) {
  return colors_used(optimal_coloring(g, budget));
}

bool is_k_colorable(const Graph& g, int k, const Budget& budget) {
  if (g.order() == 0) return k >= 0;
  if (k <= 0) return false;
  if (k == 1) return g.size() == 0;
  if (k == 2) return is_bipartite(g).has_value();
  auto greedy = dsatur_greedy(g);
  if (colors_used(greedy) <= k) return true;
  if (static_cast<int>(greedy_clique(g).size()) > k) return false;
  ColoringSearch search(g, budget);
  search.run(k + 1, k);
  return search.best_k() <= k;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbours(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < n; ++v) (side[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

bool is_forest(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_independent(const Graph& g, VertexMask set) {
  bool ok = true;
  for_each_vertex(set, [&](int v) {
    if (g.mask(v) & set) ok = false;
  });
  return ok;
}

bool is_forest_within(const Graph& g, VertexMask within) {
  // A graph is a forest iff e = v - components.
  int twice_edges = 0;
  for_each_vertex(within, [&](int v) { twice_edges += mask_size(g.mask(v) & within); });
  int components = 0;
  VertexMask left = within;
  while (left) {
    ++components;
    VertexMask frontier = left & (~left + 1);
    VertexMask seen = frontier;
    while (frontier) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.mask(v); });
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    left &= ~seen;
  }
  return twice_edges / 2 == mask_size(within) - components;
}

bool is_bipartite_within(const Graph& g, VertexMask within) {
  VertexMask left = within;
  while (left) {
    VertexMask even = left & (~left + 1);
    VertexMask odd = 0;
    VertexMask frontier = even;
    bool parity = false;
    while (frontier) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.mask(v); });
      next &= within;
      VertexMask& same = parity ? odd : even;
      VertexMask& other = parity ? even : odd;
      if (next & same) return false;
      next &= ~other;
      other |= next;
      frontier = next;
      parity = !parity;
    }
    left &= ~(even | odd);
  }
  return true;
}

IndependentSets::IndependentSets(const Graph& g, std::optional<int> max_size,
                                 VertexMask within)
    : g_(&g),
      max_size_(max_size.value_or(g.order())),
      universe_(within & low_mask(g.order())) {
  if (!g.fits_mask())
    throw DomainError("independent set enumeration supports at most 64 vertices");
}

bool IndependentSets::descend() {
  const int k = size_;
  while (true) {
    const auto d = chosen_.size();
    if (static_cast<int>(d) == k) return true;
    VertexMask& cand = candidates_[d];
    if (mask_size(cand) < k - static_cast<int>(d)) {
      if (d == 0) return false;
      chosen_.pop_back();
      continue;
    }
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    chosen_.push_back(v);
    candidates_[d + 1] = cand & ~g_->mask(v);
  }
}

std::optional<VertexMask> IndependentSets::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    size_ = 1;
    need_init_ = true;
    if (max_size_ <= 0) done_ = true;
    return VertexMask{0};
  }
  while (true) {
    if (need_init_) {
      need_init_ = false;
      chosen_.clear();
      candidates_.assign(static_cast<std::size_t>(size_) + 1, 0);
      candidates_[0] = universe_;
      found_at_size_ = false;
    } else {
      chosen_.pop_back();
    }
    if (descend()) {
      found_at_size_ = true;
      VertexMask m = 0;
      for (int v : chosen_) m |= bit(v);
      return m;
    }
    if (!found_at_size_ || size_ + 1 > max_size_) {
      done_ = true;
      return std::nullopt;
    }
    ++size_;
    need_init_ = true;
  }
}

std::vector<VertexMask> independent_sets(const Graph& g, std::optional<int> max_size) {
  std::vector<VertexMask> out;
  IndependentSets stream(g, max_size);
  while (auto s = stream.next()) out.push_back(*s);
  return out;
}

Rational two_density(const Graph& g, const Budget& budget) {
  const int n = g.order();
  if (n < 3) throw DomainError("two_density needs at least 3 vertices");
  if (!g.fits_mask()) throw DomainError("two_density supports at most 64 vertices");
  NodeCounter counter(budget, "two_density");
  bool have = false;
  std::int64_t best_num = 0, best_den = 1;

  // Depth-first include/exclude walk with a running induced-edge count.
  auto walk = [&](auto&& self, int v, VertexMask chosen, int size, int edges) -> void {
    if (v == n) {
      counter.tick();
      if (size < 3) return;
      std::int64_t num = edges - 1, den = size - 2;
      if (!have || num * best_den > best_num * den) {
        have = true;
        best_num = num;
        best_den = den;
      }
      return;
    }
    self(self, v + 1, chosen, size, edges);
    self(self, v + 1, chosen | bit(v), size + 1, edges + mask_size(g.mask(v) & chosen));
  };
  walk(walk, 0, 0, 0, 0);
  return Rational(best_num, best_den);
}

namespace {

using Words = std::vector<std::uint64_t>;

int count_words(const Words& w) {
  int c = 0;
  for (auto x : w) c += std::popcount(x);
  return c;
}

Words all_vertices(int n) {
  Words w(static_cast<std::size_t>((n + 63) / 64), ~std::uint64_t{0});
  if (n % 64 != 0 && !w.empty()) w.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return w;
}

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, int k, const Budget& budget)
      : g_(g), k_(k), counter_(budget, "find_clique") {}

  std::optional<std::vector<int>> run(const Words& among) {
    if (k_ <= 0) return std::vector<int>{};
    buffers_.assign(static_cast<std::size_t>(k_) + 1, Words(among.size()));
    buffers_[0] = among;
    if (extend(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool extend(int depth) {
    counter_.tick();
    if (depth == k_) return true;
    Words& cand = buffers_[static_cast<std::size_t>(depth)];
    if (count_words(cand) < k_ - depth) return false;
    Words work = cand;
    for (std::size_t w = 0; w < work.size(); ++w) {
      while (work[w]) {
        int v = static_cast<int>(w * 64) + std::countr_zero(work[w]);
        work[w] &= work[w] - 1;
        Words& next = buffers_[static_cast<std::size_t>(depth) + 1];
        auto row = g_.row(v);
        int remaining = 0;
        for (std::size_t x = 0; x < next.size(); ++x) {
          // work holds only vertices after v, so each clique appears once
          next[x] = work[x] & row[x];
          remaining += std::popcount(next[x]);
        }
        if (remaining < k_ - depth - 1) continue;
        chosen_.push_back(v);
        if (extend(depth + 1)) return true;
        chosen_.pop_back();
      }
    }
    return false;
  }

  const Graph& g_;
  int k_;
  NodeCounter counter_;
  std::vector<Words> buffers_;
  std::vector<int> chosen_;
};

}  // namespace

std::optional<std::vector<int>> find_clique(const Graph& g, int k, const Budget& budget) {
  if (k > g.order()) return std::nullopt;
  CliqueSearch search(g, k, budget);
  return search.run(all_vertices(g.order()));
}

std::optional<std::vector<int>> find_clique_within(const Graph& g, std::span<const int> among,
                                                   int k, const Budget& budget) {
  Words mask(static_cast<std::size_t>(g.words()), 0);
  for (int v : among) mask[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
  if (k > static_cast<int>(among.size())) return std::nullopt;
  CliqueSearch search(g, k, budget);
  return search.run(mask);
}

int clique_number(const Graph& g, const Budget& budget) {
  int best = static_cast<int>(greedy_clique(g).size());
  while (find_clique(g, best + 1, budget)) ++best;
  return best;
}

namespace {

class SubgraphSearch {
 public:
  SubgraphSearch(const Graph& host, const Graph& pattern, const Budget& budget)
      : host_(host), pattern_(pattern), counter_(budget, "contains_subgraph") {
    const int k = pattern.order();
    // Order: max degree first, then most already-ordered neighbours.
    std::vector<char> placed(static_cast<std::size_t>(k), 0);
    std::vector<int> links(static_cast<std::size_t>(k), 0);
    for (int step = 0; step < k; ++step) {
      int pick = -1;
      for (int u = 0; u < k; ++u) {
        if (placed[u]) continue;
        if (pick < 0 || links[u] > links[pick] ||
            (links[u] == links[pick] && pattern.degree(u) > pattern.degree(pick)))
          pick = u;
      }
      placed[pick] = 1;
      order_.push_back(pick);
      for (int w : pattern.neighbours(pick)) ++links[w];
    }
    std::vector<int> pos(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pos[order_[i]] = i;
    back_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      for (int w : pattern.neighbours(order_[i]))
        if (pos[w] < i) back_[i].push_back(w);
    host_deg_.resize(static_cast<std::size_t>(host.order()));
    for (int v = 0; v < host.order(); ++v) host_deg_[v] = host.degree(v);
    image_.assign(static_cast<std::size_t>(k), -1);
    free_ = all_vertices(host.order());
    cand_.assign(static_cast<std::size_t>(k), Words(free_.size()));
  }

  std::optional<Embedding> run() {
    if (extend(0)) return Embedding{image_};
    return std::nullopt;
  }

 private:
  bool extend(int depth) {
    counter_.tick();
    if (depth == static_cast<int>(order_.size())) return true;
    const int u = order_[static_cast<std::size_t>(depth)];
    const int need = pattern_.degree(u);
    Words& cand = cand_[static_cast<std::size_t>(depth)];
    cand = free_;
    for (int p : back_[static_cast<std::size_t>(depth)]) {
      auto row = host_.row(image_[p]);
      for (std::size_t x = 0; x < cand.size(); ++x) cand[x] &= row[x];
    }
    for (std::size_t w = 0; w < cand.size(); ++w) {
      while (cand[w]) {
        int c = static_cast<int>(w * 64) + std::countr_zero(cand[w]);
        cand[w] &= cand[w] - 1;
        if (host_deg_[c] < need) continue;
        image_[u] = c;
        free_[w] &= ~(std::uint64_t{1} << (c & 63));
        if (extend(depth + 1)) return true;
        free_[w] |= std::uint64_t{1} << (c & 63);
        image_[u] = -1;
      }
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  NodeCounter counter_;
  std::vector<int> order_;
  std::vector<std::vector<int>> back_;
  std::vector<int> host_deg_;
  std::vector<int> image_;
  Words free_;
  std::vector<Words> cand_;
};

}  // namespace

std::optional<Embedding> contains_subgraph(const Graph& host, const Graph& pattern,
                                           const Budget& budget) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) return std::nullopt;

  // Degree-sequence domination is necessary for any injective edge-preserving map.
  std::vector<int> pd, hd;
  for (int v = 0; v < pattern.order(); ++v) pd.push_back(pattern.degree(v));
  for (int v = 0; v < host.order(); ++v) hd.push_back(host.degree(v));
  std::sort(pd.rbegin(), pd.rend());
  std::sort(hd.rbegin(), hd.rend());
  for (std::size_t i = 0; i < pd.size(); ++i)
    if (pd[i] > hd[i]) return std::nullopt;

  // So is clique-number domination; cheap on the small patterns used here.
  const int omega = clique_number(pattern, budget);
  if (omega >= 3 && !find_clique(host, omega, budget)) return std::nullopt;

  SubgraphSearch search(host, pattern, budget);
  return search.run();
}

std::uint64_t count_bicliques(const Graph& g, int s, const Budget& budget) {
  if (s <= 0) throw DomainError("count_bicliques needs s >= 1");
  NodeCounter counter(budget, "count_bicliques");
  const int n = g.order();
  std::vector<std::uint64_t> choose(static_cast<std::size_t>(n) + 1, 0);
  // choose[m] = C(m, s)
  for (int m = s; m <= n; ++m) {
    unsigned __int128 c = 1;
    for (int i = 0; i < s; ++i) c = c * static_cast<unsigned>(m - i) / static_cast<unsigned>(i + 1);
    if (c > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("count_bicliques: count overflow");
    choose[m] = static_cast<std::uint64_t>(c);
  }
  unsigned __int128 ordered = 0;
  std::vector<Words> common(static_cast<std::size_t>(s) + 1);
  common[0] = all_vertices(n);
  auto walk = [&](auto&& self, int depth, int from) -> void {
    counter.tick();
    if (depth == s) {
      ordered += choose[static_cast<std::size_t>(count_words(common[depth]))];
      return;
    }
    for (int v = from; v < n; ++v) {
      if (g.degree(v) < s) continue;
      Words& next = common[static_cast<std::size_t>(depth) + 1];
      next = common[static_cast<std::size_t>(depth)];
      auto row = g.row(v);
      for (std::size_t x = 0; x < next.size(); ++x) next[x] &= row[x];
      if (count_words(next) < s) continue;
      self(self, depth + 1, v + 1);
    }
  };
  walk(walk, 0, 0);
  return static_cast<std::uint64_t>(ordered / 2);
}

std::vector<int> degree_core(const Graph& g, int k) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < k) {
      alive[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbours(v)) {
      if (alive[w] && --deg[w] < k) {
        alive[w] = 0;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> core;
  for (int v = 0; v < n; ++v)
    if (alive[v]) core.push_back(v);
  return core;
}

std::optional<Embedding> embed_forest(const Graph& g, const Graph& f, const Budget& budget) {
  if (!is_forest(f)) throw DomainError("embed_forest: pattern is not a forest");
  const int k = f.order();
  if (k == 0) return Embedding{};
  if (k > g.order()) return std::nullopt;

  const auto core = degree_core(g, k);
  if (!core.empty()) {
    std::vector<char> in_core(static_cast<std::size_t>(g.order()), 0);
    for (int v : core) in_core[v] = 1;
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    Embedding emb{std::vector<int>(static_cast<std::size_t>(k), -1)};
    bool ok = true;
    for (int root = 0; root < k && ok; ++root) {
      if (emb.map[root] >= 0) continue;
      int img = -1;
      for (int v : core)
        if (!used[v]) {
          img = v;
          break;
        }
      if (img < 0) {
        ok = false;
        break;
      }
      emb.map[root] = img;
      used[img] = 1;
      std::deque<int> queue{root};
      while (!queue.empty() && ok) {
        int u = queue.front();
        queue.pop_front();
        for (int child : f.neighbours(u)) {
          if (emb.map[child] >= 0) continue;
          int pick = -1;
          for (int w : g.neighbours(emb.map[u]))
            if (in_core[w] && !used[w]) {
              pick = w;
              break;
            }
          if (pick < 0) {
            ok = false;
            break;
          }
          emb.map[child] = pick;
          used[pick] = 1;
          queue.push_back(child);
        }
      }
    }
    if (ok) return emb;
  }
  return contains_subgraph(g, f, budget);
}

}  // namespace thlab
