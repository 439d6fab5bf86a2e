#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace thlab {

/// Bad command line; what() is the diagnostic, usage() the help text.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& message, std::string usage, bool help = false)
      : std::runtime_error(message), usage_(std::move(usage)), help_(help) {}
  const std::string& usage() const noexcept { return usage_; }
  bool help_requested() const noexcept { return help_; }

 private:
  std::string usage_;
  bool help_;
};

/// A parsed command line.  Unset optionals fall back to the config file and
/// then to built-in defaults when the command runs.
struct Command {
  std::string verb;

  std::optional<std::string> graph6;
  std::optional<std::string> edge_list;  // path, "-" for stdin
  std::optional<std::string> config;     // JSON file

  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> format;     // json | table

  std::optional<int> quotient_cap;
  std::vector<std::string> trees;        // zykov: graph6 per tree
  std::vector<int> swap;                 // zykov: trees with sides exchanged
  std::optional<int> r, t;
  std::optional<int> max_trees, max_t, max_tree_size;
  std::optional<int> n, K;
  std::optional<std::string> p, gamma, core;
  std::optional<int> r_parts, y_reach, x_reach;
  std::optional<int> set_size_cap, samples;
  bool jsonl = false;
};

/// Strict parse of argv without the program name.  Throws UsageError.
Command parse_args(const std::vector<std::string>& args);

/// Runs a command: result on `out`, diagnostics on `err`.  Exit status 0 on
/// success, 1 domain error, 2 budget exceeded, 3 parse or usage error.
int run(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err);

/// parse_args then run, reporting usage errors with exit status 3.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace thlab
