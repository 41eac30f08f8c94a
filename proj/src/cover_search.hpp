#pragma once

// Internal helpers shared by the exact-cover oracle and the Fill-Out search.

#include <cstdint>
#include <optional>
#include <vector>

#include "canon/enumerate.hpp"
#include "canon/rhythm.hpp"
#include "canon/sat/engine.hpp"

namespace canon::detail {

/// Fixed-width bitset over Z_n.
class Cover {
 public:
  explicit Cover(int n) : words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

  [[nodiscard]] bool test(int i) const { return (words_[word(i)] >> bit(i)) & 1u; }
  void set(int i) { words_[word(i)] |= std::uint64_t{1} << bit(i); }
  [[nodiscard]] bool disjoint(const Cover& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & other.words_[k]) return false;
    }
    return true;
  }
  void merge(const Cover& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  }
  void remove(const Cover& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
  }

 private:
  static std::size_t word(int i) { return static_cast<std::size_t>(i) >> 6; }
  static unsigned bit(int i) { return static_cast<unsigned>(i) & 63u; }

  std::vector<std::uint64_t> words_;
};

/// Translates A + b for every offset b, as bitsets.
inline std::vector<Cover> translate_masks(const Rhythm& a) {
  const int n = a.modulus();
  std::vector<Cover> masks(static_cast<std::size_t>(n), Cover(n));
  for (int b = 0; b < n; ++b) {
    for (int e : a.elements()) masks[static_cast<std::size_t>(b)].set((e + b) % n);
  }
  return masks;
}

/// Node counting with a hard cap and an optional wall-clock deadline.
class SearchBudget {
 public:
  SearchBudget(std::uint64_t node_limit, std::optional<sat::Clock::time_point> deadline)
      : node_limit_(node_limit), deadline_(deadline) {}

  /// Counts one node; false once the deadline has passed.
  bool tick() {
    if (++nodes_ > node_limit_) {
      throw SearchLimitExceeded("search exceeded " + std::to_string(node_limit_) + " nodes");
    }
    if (deadline_ && (nodes_ & 4095u) == 0 && sat::Clock::now() >= *deadline_) expired_ = true;
    return !expired_;
  }
  [[nodiscard]] bool expired() const { return expired_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t node_limit_;
  std::optional<sat::Clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
  bool expired_ = false;
};

/// Filters periodic complements (when asked) and reduces the rest to sorted canonical classes.
std::vector<Rhythm> reduce_to_classes(const std::vector<Rhythm>& complements, bool aperiodic_only);

}  // namespace canon::detail
