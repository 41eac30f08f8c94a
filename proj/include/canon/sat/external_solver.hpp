#pragma once

#include <string>

#include "canon/sat/engine.hpp"

namespace canon::sat {

/**
 * Runs an external DIMACS solver through a process boundary.
 *
 * Each solve() writes every clause added so far to a temporary DIMACS file,
 * runs `command <file>` and reads the competition-style "s ..." and "v ..."
 * lines from its standard output.
 */
class ExternalSolver final : public SatEngine {
 public:
  ExternalSolver(int num_vars, std::string command);

  [[nodiscard]] std::string_view name() const override { return "external"; }

 protected:
  void on_clause_added(std::span<const int>) override {}
  SolveResult run_solve(const SolveLimits& limits) override;

 private:
  std::string command_;
};

/// Parses solver output in the "s SATISFIABLE" / "v 1 -2 ... 0" convention.
SolveResult parse_solver_output(const std::string& output, int num_vars);

}  // namespace canon::sat
