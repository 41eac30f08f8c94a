#include "canon/sat/backtracking_solver.hpp"

namespace canon::sat {

namespace {

int lit_value(const std::vector<std::int8_t>& assign, int lit) {
  const int v = assign[static_cast<std::size_t>(lit < 0 ? -lit : lit)];
  return lit < 0 ? -v : v;
}

}  // namespace

// Returns false on conflict.
bool BacktrackingSolver::unit_propagate(std::vector<std::int8_t>& assign) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < num_clauses(); ++c) {
      const auto lits = clause(c);
      int unassigned = 0;
      int last = 0;
      bool satisfied = false;
      for (int lit : lits) {
        const int v = lit_value(assign, lit);
        if (v > 0) {
          satisfied = true;
          break;
        }
        if (v == 0) {
          ++unassigned;
          last = lit;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) return false;
      if (unassigned == 1) {
        assign[static_cast<std::size_t>(last < 0 ? -last : last)] = last < 0 ? -1 : 1;
        changed = true;
      }
    }
  }
  return true;
}

BacktrackingSolver::Outcome BacktrackingSolver::dpll(std::vector<std::int8_t>& assign, const SolveLimits& limits) {
  if (limits.deadline && (++nodes_ & 1023u) == 0 && Clock::now() >= *limits.deadline) return Outcome::timeout;
  if (!unit_propagate(assign)) return Outcome::unsat;
  int branch = 0;
  for (int v = 1; v <= num_vars(); ++v) {
    if (assign[static_cast<std::size_t>(v)] == 0) {
      branch = v;
      break;
    }
  }
  if (branch == 0) return Outcome::sat;
  for (std::int8_t polarity : {std::int8_t{-1}, std::int8_t{1}}) {
    auto trial = assign;
    trial[static_cast<std::size_t>(branch)] = polarity;
    const Outcome o = dpll(trial, limits);
    if (o != Outcome::unsat) {
      if (o == Outcome::sat) assign = std::move(trial);
      return o;
    }
  }
  return Outcome::unsat;
}

SolveResult BacktrackingSolver::run_solve(const SolveLimits& limits) {
  std::vector<std::int8_t> assign(static_cast<std::size_t>(num_vars()) + 1, 0);
  SolveResult result;
  switch (dpll(assign, limits)) {
    case Outcome::sat:
      result.status = Status::sat;
      result.model.assign(assign.size(), false);
      for (std::size_t v = 1; v < assign.size(); ++v) result.model[v] = assign[v] > 0;
      break;
    case Outcome::unsat:
      result.status = Status::unsat;
      break;
    case Outcome::timeout:
      result.status = Status::unknown;
      break;
  }
  return result;
}

}  // namespace canon::sat
