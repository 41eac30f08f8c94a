#include "canon/vuza.hpp"

#include <numeric>
#include <vector>

namespace canon {

std::string VuzaParams::to_string() const {
  return "(p1=" + std::to_string(p1) + ", n1=" + std::to_string(n1) + ", p2=" + std::to_string(p2) +
         ", n2=" + std::to_string(n2) + ", n3=" + std::to_string(n3) + ")";
}

std::optional<std::string> vuza_violation(const VuzaParams& params, int n) {
  if (params.p1 < 2) return "p1 must be >= 2";
  if (params.n1 < 2) return "n1 must be >= 2";
  if (params.p2 < 2) return "p2 must be >= 2";
  if (params.n2 < 2) return "n2 must be >= 2";
  if (params.n3 < 2) return "n3 must be >= 2";
  if (params.product() != n) {
    return "p1*n1*p2*n2*n3 = " + std::to_string(params.product()) + " differs from n = " + std::to_string(n);
  }
  const int g = std::gcd(params.p1 * params.n1, params.p2 * params.n2);
  if (g != 1) return "gcd(p1*n1, p2*n2) = " + std::to_string(g) + ", must be 1";
  return std::nullopt;
}

bool validate(const VuzaParams& params, int n) { return !vuza_violation(params, n).has_value(); }

Rhythm construct_inner(const VuzaParams& params, int n) {
  if (auto why = vuza_violation(params, n)) throw RhythmError("invalid Vuza parameters " + params.to_string() + ": " + *why);

  const int step1 = params.p1 * params.n1;
  const int step2 = params.p2 * params.n2;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> elements;
  elements.reserve(static_cast<std::size_t>(params.n1 * params.n2));
  for (int i = 0; i < params.n2; ++i) {
    for (int j = 0; j < params.n1; ++j) {
      const int e = static_cast<int>((static_cast<long long>(params.n3) * (step1 * i + step2 * j)) % n);
      if (seen[static_cast<std::size_t>(e)]) {
        throw RhythmError("Vuza summands collide at " + std::to_string(e) + " for " + params.to_string());
      }
      seen[static_cast<std::size_t>(e)] = true;
      elements.push_back(e);
    }
  }
  Rhythm a(n, std::move(elements));
  if (auto z = smallest_period(a)) {
    throw RhythmError("constructed rhythm " + a.to_string() + " is periodic with period " + std::to_string(*z));
  }
  return a;
}

}  // namespace canon
