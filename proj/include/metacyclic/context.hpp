#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

namespace metacyclic {

/// Raised when an enumeration would exceed its configured budget. Never
/// replaced by a truncated result.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Size caps on exhaustive enumerations, in terms of n.
struct EnumerationLimits {
  int harborth_max_n = 8;   // full Harborth / weighted / full-product brute force
  int classify_max_n = 12;  // classification-only enumeration over size n, n+1
  int lemma_max_n = 12;     // alpha-set enumeration in the lemma harness
  int egz_max_order = 10;   // 2n for EGZ multiset searches
};

inline constexpr std::uint64_t kUnlimitedOps = std::numeric_limits<std::uint64_t>::max();
inline constexpr std::uint64_t kDefaultOpBudget = 20'000'000'000ULL;

/// Shared state for one analysis run: an operation budget (counted in
/// product-set evaluations and search nodes), enumeration caps and the
/// worker count. Charges are thread-safe.
class Context {
 public:
  explicit Context(std::uint64_t op_budget = kUnlimitedOps, int workers = 1,
                   EnumerationLimits limits = {})
      : limit_(op_budget), workers_(workers < 1 ? 1 : workers), limits_(limits) {}

  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  void charge(std::uint64_t ops) const {
    if (limit_ == kUnlimitedOps) {
      used_.fetch_add(ops, std::memory_order_relaxed);
      return;
    }
    const std::uint64_t now = used_.fetch_add(ops, std::memory_order_relaxed) + ops;
    if (now > limit_)
      throw BudgetExceeded("operation budget of " + std::to_string(limit_) + " exceeded");
  }

  std::uint64_t used() const noexcept { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const noexcept { return limit_; }
  int workers() const noexcept { return workers_; }
  const EnumerationLimits& limits() const noexcept { return limits_; }

  void require_n_within(int n, int cap, const char* what) const {
    if (n > cap)
      throw BudgetExceeded(std::string(what) + " enumeration limited to n <= " + std::to_string(cap) +
                           ", got n = " + std::to_string(n));
  }

  /// Unlimited operations, default caps, one worker.
  static const Context& defaults() {
    static const Context ctx;
    return ctx;
  }

 private:
  std::uint64_t limit_;
  int workers_;
  EnumerationLimits limits_;
  mutable std::atomic<std::uint64_t> used_{0};
};

}  // namespace metacyclic
