#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "hermcat/support/errors.hpp"

namespace hermcat {

// Counts elementary matrix operations performed by exhaustive searches.
// Charging is thread-safe. An unlimited budget never records anything, so the
// shared instance returned by unlimited() is never written to.
class Budget {
 public:
  static constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}
  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  static Budget& unlimited() {
    static Budget instance(kUnlimited);
    return instance;
  }

  bool is_unlimited() const { return limit_ == kUnlimited; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

  void charge(std::uint64_t ops, std::string_view what) {
    if (is_unlimited()) return;
    const std::uint64_t total = used_.fetch_add(ops, std::memory_order_relaxed) + ops;
    if (total > limit_) throw BudgetExceeded(std::string(what) + ": budget exhausted", total);
  }

  // Rejects work whose up-front size estimate already exceeds what remains.
  void require(std::uint64_t estimate, std::string_view what) const {
    if (is_unlimited()) return;
    if (estimate > limit_ || used() > limit_ - estimate) {
      throw BudgetExceeded(std::string(what) + " exceeds the operation budget", estimate);
    }
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

// Saturating helpers for size estimates.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

}  // namespace hermcat
