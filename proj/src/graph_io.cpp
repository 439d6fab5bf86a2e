#include "thlab/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>

#include "thlab/errors.hpp"

namespace thlab {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view in, std::size_t pos) {
  if (pos >= in.size()) throw ParseError("truncated graph6 data", pos);
  auto c = static_cast<unsigned char>(in[pos]);
  if (c < 63 || c > 126)
    throw ParseError("byte " + std::to_string(c) + " outside graph6 range 63..126",
                     pos);
  return c - kBias;
}

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

}  // namespace

Graph parse_graph(std::string_view input, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(input)
                                       : parse_edge_list(input);
}

Graph parse_graph6(std::string_view input) {
  std::size_t pos = 0;
  if (input.starts_with(kHeader)) pos = kHeader.size();
  std::size_t end = input.size();
  if (end > pos && input[end - 1] == '\n') --end;
  if (end > pos && input[end - 1] == '\r') --end;
  std::string_view in = input.substr(0, end);

  if (pos >= in.size()) throw ParseError("missing graph6 size header", pos);

  std::uint64_t n = 0;
  const std::size_t header_at = pos;
  int first = sextet(in, pos);
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
    pos += 1;
  } else {
    ++pos;
    int groups = 3;
    if (pos < in.size() && static_cast<unsigned char>(in[pos]) == 126) {
      ++pos;
      groups = 6;
    }
    for (int i = 0; i < groups; ++i) n = (n << 6) | sextet(in, pos++);
    if ((groups == 3 && n <= 62) || (groups == 6 && n <= 258047))
      throw ParseError("non-minimal graph6 size header", header_at);
    if (n > (1U << 20))
      throw ParseError("graph6 order " + std::to_string(n) + " too large",
                       header_at);
  }

  const int order = static_cast<int>(n);
  Graph g(order);
  const std::uint64_t total_bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (total_bits + 5) / 6;
  const std::size_t data_at = pos;
  if (in.size() - pos < bytes)
    throw ParseError("truncated graph6 bit stream: need " +
                         std::to_string(bytes) + " data bytes",
                     in.size());

  std::uint64_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t at = data_at + k / 6;
      int chunk = sextet(in, at);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (total_bits % 6 != 0) {
    std::size_t at = data_at + bytes - 1;
    int chunk = sextet(in, at);
    int pad = static_cast<int>(6 - total_bits % 6);
    if (chunk & ((1 << pad) - 1))
      throw ParseError("nonzero graph6 padding bits", at);
  }
  if (data_at + bytes != in.size())
    throw ParseError("trailing bytes after graph6 data", data_at + bytes);
  return g;
}

namespace {

struct Token {
  std::int64_t value;
  std::size_t offset;
};

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view in) : in_(in) {}

  bool next(Token& tok) {
    while (pos_ < in_.size()) {
      char c = in_[pos_];
      if (c == '#') {
        while (pos_ < in_.size() && in_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ >= in_.size()) return false;
    std::size_t start = pos_;
    while (pos_ < in_.size() &&
           !std::isspace(static_cast<unsigned char>(in_[pos_])))
      ++pos_;
    std::string_view word = in_.substr(start, pos_ - start);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || ptr != word.data() + word.size() || v < 0)
      throw ParseError("expected a non-negative integer, got '" +
                           std::string(word) + "'",
                       start);
    tok = {v, start};
    return true;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view input) {
  Tokenizer tz(input);
  Token n_tok{}, m_tok{};
  if (!tz.next(n_tok)) throw ParseError("missing edge-list header 'n m'", 0);
  if (!tz.next(m_tok))
    throw ParseError("missing edge count in edge-list header", tz.pos());
  if (n_tok.value > (1 << 20))
    throw ParseError("vertex count too large", n_tok.offset);

  const int n = static_cast<int>(n_tok.value);
  Graph g(n);
  std::set<std::pair<int, int>> seen;
  for (std::int64_t e = 0; e < m_tok.value; ++e) {
    Token a{}, b{};
    if (!tz.next(a) || !tz.next(b))
      throw ParseError("expected " + std::to_string(m_tok.value) +
                           " edges, found " + std::to_string(e),
                       tz.pos());
    for (const Token& t : {a, b})
      if (t.value >= n)
        throw ParseError("vertex index " + std::to_string(t.value) +
                             " >= n = " + std::to_string(n),
                         t.offset);
    if (a.value == b.value) throw ParseError("self-loop", a.offset);
    const int u = static_cast<int>(std::min(a.value, b.value));
    const int v = static_cast<int>(std::max(a.value, b.value));
    if (!seen.insert({u, v}).second) throw ParseError("duplicate edge", a.offset);
    g.add_edge(u, v);
  }
  Token extra{};
  if (tz.next(extra))
    throw ParseError("unexpected data after the declared edges", extra.offset);
  return g;
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const auto n = static_cast<std::uint64_t>(g.order());
  put_size(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace thlab
