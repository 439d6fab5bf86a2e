#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace thlab {

/// Raised when an input violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact search exhausts its node budget.  Never a negative
/// answer: the caller learns nothing about the question asked.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what_op, std::uint64_t limit)
      : std::runtime_error(what_op + ": search budget of " +
                           std::to_string(limit) + " nodes exceeded"),
        limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

/// Malformed graph6 / edge-list / config input, with the byte offset at which
/// the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (at byte " + std::to_string(offset) +
                           ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Node limit shared by every exact search.
struct Budget {
  std::uint64_t node_limit = kDefaultNodeBudget;
};

/// Counts search nodes against a Budget; throws BudgetExceeded on overrun.
class NodeCounter {
 public:
  NodeCounter(const Budget& budget, const char* op)
      : limit_(budget.node_limit), op_(op) {}

  void tick(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetExceeded(op_, limit_);
  }

  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  const char* op_;
};

}  // namespace thlab
