#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace distnum {

// Violated operation precondition or malformed input.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A bounded search ran out of nodes. Distinct from any mathematical answer.
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search terminated without an answer and without a certificate that
// none exists.
struct inconclusive_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Every statement this library
// re-verifies is a theorem, so this signals an implementation bug, not a
// mathematical discovery.
struct verification_error : std::logic_error {
  using std::logic_error::logic_error;
};

struct SearchOptions {
  std::uint64_t node_limit = 10'000'000;
};

// Shared node counter for one top-level operation.
class SearchBudget {
public:
  explicit SearchBudget(const SearchOptions& opts = {}) : limit_(opts.node_limit) {}

  void tick(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_)
      throw budget_exceeded("search budget exceeded (" + std::to_string(limit_) +
                            " nodes)");
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace distnum
