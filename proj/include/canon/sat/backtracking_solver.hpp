#pragma once

#include <cstdint>
#include <vector>

#include "canon/sat/engine.hpp"

namespace canon::sat {

/// Plain DPLL (unit propagation + chronological backtracking). Reference engine for differential tests.
class BacktrackingSolver final : public SatEngine {
 public:
  explicit BacktrackingSolver(int num_vars) : SatEngine(num_vars) {}

  [[nodiscard]] std::string_view name() const override { return "backtracking"; }

 protected:
  void on_clause_added(std::span<const int>) override {}
  SolveResult run_solve(const SolveLimits& limits) override;

 private:
  enum class Outcome { sat, unsat, timeout };
  Outcome dpll(std::vector<std::int8_t>& assign, const SolveLimits& limits);
  bool unit_propagate(std::vector<std::int8_t>& assign) const;

  std::uint64_t nodes_ = 0;
};

}  // namespace canon::sat
