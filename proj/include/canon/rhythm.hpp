#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace canon {

/// Thrown for malformed rhythms or operations on incompatible rhythms.
class RhythmError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A subset of Z_n together with its modulus n.
 *
 * Elements are kept strictly increasing in [0, n-1]. The empty rhythm is a
 * valid value (partial search states use it), but periodicity and tiling
 * queries reject it.
 */
class Rhythm {
 public:
  /// Validates and sorts `elements`; rejects duplicates and out-of-range values.
  Rhythm(int modulus, std::vector<int> elements);

  /// The empty rhythm in Z_n.
  static Rhythm empty(int modulus);

  /// Builds a rhythm from a 0/1 characteristic vector of length n.
  static Rhythm from_indicator(std::span<const bool> indicator);

  [[nodiscard]] int modulus() const noexcept { return modulus_; }
  [[nodiscard]] const std::vector<int>& elements() const noexcept { return elements_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] bool is_empty() const noexcept { return elements_.empty(); }
  [[nodiscard]] bool contains(int value) const;
  [[nodiscard]] std::vector<bool> indicator() const;

  /// Comma-separated text form, e.g. "0,1,5".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Rhythm&, const Rhythm&) = default;
  /// Orders by modulus, then lexicographically by element sequence.
  friend auto operator<=>(const Rhythm& a, const Rhythm& b) {
    if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
    return a.elements_ <=> b.elements_;
  }

 private:
  Rhythm() = default;

  int modulus_ = 1;
  std::vector<int> elements_;
};

/// Prime factorization and maximal divisors D_n = { n/p : p prime, p | n }.
struct DivisorSet {
  int modulus = 0;
  std::vector<int> maximal_divisors;                  // ascending
  std::vector<std::pair<int, int>> prime_factorization;  // (p, alpha), p ascending

  [[nodiscard]] std::size_t prime_count() const noexcept { return prime_factorization.size(); }
};

/// Characteristic polynomial of a rhythm, coefficients indexed by exponent.
struct Polynomial01 {
  int modulus = 0;
  std::vector<int> coefficients;
};

/// (p, alpha) pairs of n's factorization; n = 1 yields an empty list.
std::vector<std::pair<int, int>> prime_factorization(int n);

/// D_n together with the factorization. Requires n >= 2.
DivisorSet maximal_divisors(int n);

/// { (a + t) mod n : a in A }. Any integer t is accepted.
Rhythm translate(const Rhythm& a, long long t);

/// Smallest z in [1, n-1] with z + A = A, or nullopt when A is aperiodic.
std::optional<int> smallest_period(const Rhythm& a);

/// Periodicity tested only against the maximal divisors in `divisors`.
bool is_periodic_fast(const Rhythm& a, const DivisorSet& divisors);

/// Convenience overload; computes D_n itself and handles n = 1.
bool is_periodic(const Rhythm& a);

/// True iff (a, b) -> a + b mod n is a bijection A x B -> Z_n.
bool is_tiling(const Rhythm& a, const Rhythm& b);

Polynomial01 characteristic_polynomial(const Rhythm& a);

/// p_A * p_B mod (x^n - 1) with exact integer coefficients.
std::vector<long long> cyclic_product(const Polynomial01& p, const Polynomial01& q);

/// True iff p_A(x) p_B(x) == 1 + x + ... + x^{n-1} mod (x^n - 1).
bool poly_tiling_check(const Rhythm& a, const Rhythm& b);

/// Lexicographically smallest translate of A (it always contains 0).
Rhythm canonicalize(const Rhythm& a);

/// Parses "0,1,5" (whitespace tolerated) as a rhythm in Z_n.
Rhythm parse_rhythm(std::string_view text, int modulus);

/// Parses {"n": 9, "elements": [0, 1, 5]}.
Rhythm parse_rhythm_json(std::string_view json_text);

std::string to_json(const Rhythm& a);

}  // namespace canon
