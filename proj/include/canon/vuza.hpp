#pragma once

#include <optional>
#include <string>

#include "canon/rhythm.hpp"

namespace canon {

/// Parameters (p1, n1, p2, n2, n3) of Vuza's construction for a modulus n = p1 n1 p2 n2 n3.
struct VuzaParams {
  int p1 = 0;
  int n1 = 0;
  int p2 = 0;
  int n2 = 0;
  int n3 = 0;

  [[nodiscard]] long long product() const noexcept {
    return static_cast<long long>(p1) * n1 * p2 * n2 * n3;
  }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const VuzaParams&, const VuzaParams&) = default;
};

/// Describes the first violated invariant, or nullopt when the parameters are valid for n.
std::optional<std::string> vuza_violation(const VuzaParams& params, int n);

bool validate(const VuzaParams& params, int n);

/**
 * Inner rhythm A = n3 * (p1 n1 {0..n2-1} (+) p2 n2 {0..n1-1}) mod n.
 *
 * The result is returned in this construction form, which always contains 0;
 * canonicalize() gives the lex-min translate used by the encoder.
 *
 * Throws RhythmError when the parameters are invalid or when the result fails the
 * aperiodicity self-check.
 */
Rhythm construct_inner(const VuzaParams& params, int n);

}  // namespace canon
