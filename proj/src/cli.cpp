#include "thlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "thlab/algorithms.hpp"
#include "thlab/graph_io.hpp"
#include "thlab/json_io.hpp"

namespace thlab {
namespace {

const std::vector<std::string> kGraphVerbs = {"classify", "threshold", "threshold-star",
                                              "regimes",  "regimes-star", "zykov-search"};

void add_graph_input(CLI::App* sub, Command& cmd) {
  sub->add_option("--graph6", cmd.graph6, "graph6 string");
  sub->add_option("--edge-list", cmd.edge_list, "edge-list file ('-' for stdin)");
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  Command cmd;
  CLI::App app{"Chromatic threshold laboratory", "threshold_lab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--budget", cmd.budget, "node budget per exact search");
  app.add_option("--seed", cmd.seed, "base seed");
  app.add_option("--trials", cmd.trials, "number of trials");
  app.add_option("--format", cmd.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--config", cmd.config, "JSON config file");

  auto* classify = app.add_subcommand("classify", "structural classes with witnesses");
  auto* threshold = app.add_subcommand("threshold", "delta_chi with witness");
  auto* star = app.add_subcommand("threshold-star", "delta*_chi with quotient witness");
  auto* regimes = app.add_subcommand("regimes", "regime table for delta_chi(H,p)");
  auto* regimes_star = app.add_subcommand("regimes-star", "regime table for delta*_chi(H,p)");
  auto* zykov = app.add_subcommand("zykov", "build a modified Zykov graph");
  auto* zsearch = app.add_subcommand("zykov-search", "bounded search for a Zykov host");
  auto* sample = app.add_subcommand("sample", "sample G(n,p)");
  auto* experiment = app.add_subcommand("experiment", "two-round template experiment");
  auto* audit = app.add_subcommand("audit", "audit ambient random-graph properties");

  for (auto* sub : {classify, threshold, star, regimes, regimes_star, zsearch})
    add_graph_input(sub, cmd);
  for (auto* sub : {star, regimes_star})
    sub->add_option("--quotient-cap", cmd.quotient_cap, "vertex cap for quotients");

  zykov->add_option("--tree", cmd.trees, "tree as graph6 (repeatable)");
  zykov->add_option("--swap", cmd.swap, "index of a tree with sides exchanged (repeatable)");
  zykov->add_option("--r", cmd.r, "r >= 3");
  zykov->add_option("--t", cmd.t, "class size t >= 1");

  zsearch->add_option("--max-trees", cmd.max_trees, "largest number of trees");
  zsearch->add_option("--max-t", cmd.max_t, "largest class size");
  zsearch->add_option("--max-tree-size", cmd.max_tree_size, "largest tree order");

  for (auto* sub : {sample, experiment, audit}) {
    sub->add_option("--n", cmd.n, "vertex count");
    sub->add_option("--p", cmd.p, "edge probability (decimal or fraction)");
  }
  experiment->add_option("--K", cmd.K, "core order");
  experiment->add_option("--core", cmd.core, "core graph as graph6");
  experiment->add_option("--gamma", cmd.gamma, "degree slack");
  experiment->add_option("--r-parts", cmd.r_parts, "parts of the filler (0: clique)");
  experiment->add_option("--y-reach", cmd.y_reach, "filler neighbours per Y vertex");
  experiment->add_option("--x-reach", cmd.x_reach, "filler neighbours per X vertex");
  experiment->add_flag("--jsonl", cmd.jsonl, "one JSON line per trial, then the summary");
  audit->add_option("--set-size-cap", cmd.set_size_cap, "largest common-neighbourhood set");
  audit->add_option("--samples", cmd.samples, "sampled sets per statistic");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    throw UsageError("help", subs.empty() ? app.help() : subs.front()->help(), true);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what(), app.help());
  }
  cmd.verb = app.get_subcommands().front()->get_name();

  const bool needs_graph =
      std::find(kGraphVerbs.begin(), kGraphVerbs.end(), cmd.verb) != kGraphVerbs.end();
  const int inputs = cmd.graph6.has_value() + cmd.edge_list.has_value();
  if (needs_graph && inputs != 1)
    throw UsageError(cmd.verb + " needs exactly one of --graph6 or --edge-list",
                     app.get_subcommand(cmd.verb)->help());
  return cmd;
}

namespace {

std::string read_all(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string read_file(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open '" + path + "'", 0);
  return read_all(f);
}

std::uint64_t parse_budget(const std::string& text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0)
    throw ParseError("THRESHOLD_LAB_BUDGET must be a positive integer", 0);
  return v;
}

// Flags beat the config file, which beats built-in defaults; the budget
// alone also honours THRESHOLD_LAB_BUDGET between config and flags.
class Settings {
 public:
  Settings(const Command& cmd, std::istream& in) : cmd_(cmd) {
    if (cmd.config) config_ = json::parse(read_file(*cmd.config, in));
    if (!config_.is_object()) throw ParseError("config must be a JSON object", 0);
  }

  template <class T>
  T get(const std::optional<T>& flag, const char* key, T fallback) const {
    if (flag) return *flag;
    if (config_.contains(key)) return config_.at(key).get<T>();
    return fallback;
  }

  // Numbers or strings, kept exact.
  Rational rational(const std::optional<std::string>& flag, const char* key,
                    const char* fallback) const {
    if (flag) return Rational::parse(*flag);
    if (config_.contains(key)) {
      const json& v = config_.at(key);
      return Rational::parse(v.is_string() ? v.get<std::string>() : v.dump());
    }
    return Rational::parse(fallback);
  }

  Budget budget() const {
    Budget b;
    if (config_.contains("budget")) b.node_limit = config_.at("budget").get<std::uint64_t>();
    if (const char* env = std::getenv("THRESHOLD_LAB_BUDGET")) b.node_limit = parse_budget(env);
    if (cmd_.budget) b.node_limit = *cmd_.budget;
    return b;
  }

  const json& config() const { return config_; }

 private:
  const Command& cmd_;
  json config_ = json::object();
};

Graph read_graph(const Command& cmd, std::istream& in) {
  if (cmd.graph6) return parse_graph6(*cmd.graph6);
  return parse_edge_list(read_file(*cmd.edge_list, in));
}

json with_schema(json body) {
  json out{{"schema", kSchemaVersion}};
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(),
                                         [](const json& x) { return x.is_object(); })) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void print_table(const json& j, std::ostream& out) {
  if (j.contains("rows")) {
    out << "range\tvalue\tsource\n";
    for (const auto& row : j.at("rows")) {
      const auto& v = row.at("value");
      std::string value = v.at("kind").get<std::string>();
      if (value == "Exact") value = v.at("v").get<std::string>();
      else if (value == "Interval")
        value = "[" + v.at("lo").get<std::string>() + ", " + v.at("hi").get<std::string>() + "]";
      const auto& src = row.at("source");
      out << row.at("text").get<std::string>() << '\t' << value << '\t'
          << (src.is_null() ? v.value("note", "") : src.get<std::string>()) << '\n';
    }
    return;
  }
  flatten(j, "", out);
}

json run_verb(const Command& cmd, const Settings& s, std::istream& in, std::string& raw) {
  const Budget budget = s.budget();
  const std::uint64_t seed = s.get(cmd.seed, "seed", std::uint64_t{0});

  if (cmd.verb == "classify") {
    const Graph h = read_graph(cmd, in);
    json j = classify(h, budget);
    j["graph"] = h;
    return j;
  }
  if (cmd.verb == "threshold") {
    const Graph h = read_graph(cmd, in);
    json j = chromatic_threshold(h, budget);
    j["graph"] = h;
    return j;
  }
  if (cmd.verb == "threshold-star") {
    const Graph h = read_graph(cmd, in);
    json j = chromatic_threshold_star(
        h, budget, s.get(cmd.quotient_cap, "quotient_cap", kDefaultQuotientVertexCap));
    j["graph"] = h;
    return j;
  }
  if (cmd.verb == "regimes" || cmd.verb == "regimes-star") {
    const Graph h = read_graph(cmd, in);
    RegimeTable t = cmd.verb == "regimes"
                        ? regime_table(h, budget)
                        : regime_table_star(h, budget,
                                            s.get(cmd.quotient_cap, "quotient_cap",
                                                  kDefaultQuotientVertexCap));
    validate(t);
    json j = t;
    j["graph"] = h;
    return j;
  }
  if (cmd.verb == "zykov") {
    ZykovSpec spec;
    if (!cmd.trees.empty() || !s.config().contains("spec")) {
      for (const auto& g6 : cmd.trees) spec.trees.push_back({parse_graph6(g6), false});
      for (int j : cmd.swap) {
        if (j < 0 || j >= static_cast<int>(spec.trees.size()))
          throw DomainError("--swap index out of range");
        spec.trees[static_cast<std::size_t>(j)].swapped = true;
      }
    } else {
      spec = zykov_spec_from_json(s.config().at("spec"));
    }
    spec.r = s.get(cmd.r, "r", spec.r);
    spec.t = s.get(cmd.t, "t", spec.t);
    const ZykovGraph z = zykov(spec);
    json j = z;
    j["spec"] = spec;
    j["edge_list"] = to_edge_list(z.graph);
    return j;
  }
  if (cmd.verb == "zykov-search") {
    const Graph h = read_graph(cmd, in);
    ZykovBounds bounds;
    bounds.max_trees = s.get(cmd.max_trees, "max_trees", bounds.max_trees);
    bounds.max_t = s.get(cmd.max_t, "max_t", bounds.max_t);
    bounds.max_tree_size = s.get(cmd.max_tree_size, "max_tree_size", bounds.max_tree_size);
    auto w = search_zykov_witness(h, bounds, budget);
    json j{{"graph", h},
           {"bounds",
            {{"max_trees", bounds.max_trees},
             {"max_t", bounds.max_t},
             {"max_tree_size", bounds.max_tree_size}}},
           {"found", w.has_value()},
           {"status", w ? "found" : "not found within bounds"}};
    j["spec"] = w ? json(w->spec) : json(nullptr);
    j["embedding"] = w ? json(w->embedding.map) : json(nullptr);
    return j;
  }
  if (cmd.verb == "sample") {
    const GnpParams params{s.get(cmd.n, "n", 0), Probability(s.rational(cmd.p, "p", "0")), seed};
    const Graph g = sample_gnp(params);
    return json{{"rng", kRngName}, {"n", params.n}, {"p", params.p.str()},
                {"seed", seed},    {"m", g.size()}, {"graph6", to_graph6(g)}};
  }
  if (cmd.verb == "audit") {
    const int n = s.get(cmd.n, "n", 0);
    const Probability p(s.rational(cmd.p, "p", "0"));
    const Graph g = sample_gnp({n, p, seed});
    const AmbientReport rep = check_ambient_properties(
        g, p.to_double(), s.get(cmd.set_size_cap, "set_size_cap", 2),
        s.get(cmd.samples, "samples", 200), derive_seed(seed, 1));
    return json{{"rng", kRngName}, {"n", n}, {"p", p.str()}, {"seed", seed}, {"report", rep}};
  }
  if (cmd.verb == "experiment") {
    const int n = s.get(cmd.n, "n", 200);
    const int k = s.get(cmd.K, "K", 3);
    const Graph core = s.get(cmd.core, "core", std::string()).empty()
                           ? complete_graph(k)
                           : parse_graph6(s.get(cmd.core, "core", std::string()));
    TemplateFiller filler;
    const json fill = s.config().value("filler", json::object());
    filler.r_parts = cmd.r_parts ? *cmd.r_parts : fill.value("r_parts", filler.r_parts);
    filler.y_reach = cmd.y_reach ? *cmd.y_reach : fill.value("y_reach", filler.y_reach);
    filler.x_reach = cmd.x_reach ? *cmd.x_reach : fill.value("x_reach", filler.x_reach);
    const TemplateGraph tmpl = make_template(core, n, k, filler);
    const ExperimentReport rep = run_template_experiment(
        tmpl, Probability(s.rational(cmd.p, "p", "1/2")), s.rational(cmd.gamma, "gamma", "1/10"),
        seed, s.get(cmd.trials, "trials", 100), budget);
    if (cmd.jsonl || s.config().value("jsonl", false)) raw = to_json_lines(rep);
    return rep;
  }
  throw UsageError("unknown verb " + cmd.verb, "");
}

}  // namespace

int run(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    const Settings settings(cmd, in);
    const std::string format = settings.get(cmd.format, "format", std::string("json"));
    if (format != "json" && format != "table")
      throw UsageError("format must be json or table", "");
    std::string raw;
    const json result = with_schema(run_verb(cmd, settings, in, raw));
    if (!raw.empty()) {
      out << raw;
    } else if (format == "table") {
      print_table(result, out);
    } else {
      out << result.dump(2) << '\n';
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << e.usage();
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const json::exception& e) {
    err << "config error: " << e.what() << '\n';
    return 3;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const UsageError& e) {
    if (e.help_requested()) {
      out << e.usage();
      return 0;
    }
    err << "usage error: " << e.what() << '\n' << e.usage();
    return 3;
  }
  return run(cmd, in, out, err);
}

}  // namespace thlab
