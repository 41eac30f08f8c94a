#include "canon/sat/engine.hpp"

#include <stdexcept>

#include "canon/sat/backtracking_solver.hpp"
#include "canon/sat/cdcl_solver.hpp"
#include "canon/sat/external_solver.hpp"

namespace canon::sat {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::sat:
      return "SAT";
    case Status::unsat:
      return "UNSAT";
    case Status::unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::optional<std::size_t> first_violated_clause(std::span<const Clause> clauses, const std::vector<bool>& model) {
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    bool satisfied = false;
    for (int lit : clauses[c]) {
      const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      const bool value = var < model.size() && model[var];
      if (value == (lit > 0)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return c;
  }
  return std::nullopt;
}

SatEngine::SatEngine(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1) throw std::invalid_argument("a clause store needs at least one variable");
}

void SatEngine::add_clause(std::span<const int> clause) {
  for (int lit : clause) {
    if (lit == 0 || lit > num_vars_ || -lit > num_vars_) {
      throw std::out_of_range("literal " + std::to_string(lit) + " outside declared variables 1.." +
                              std::to_string(num_vars_));
    }
  }
  starts_.push_back(literals_.size());
  literals_.insert(literals_.end(), clause.begin(), clause.end());
  on_clause_added(clause);
}

std::span<const int> SatEngine::clause(std::size_t index) const {
  const std::size_t begin = starts_.at(index);
  const std::size_t end = index + 1 < starts_.size() ? starts_[index + 1] : literals_.size();
  return {literals_.data() + begin, end - begin};
}

std::vector<Clause> SatEngine::clauses() const {
  std::vector<Clause> out;
  out.reserve(starts_.size());
  for (std::size_t c = 0; c < starts_.size(); ++c) {
    const auto lits = clause(c);
    out.emplace_back(lits.begin(), lits.end());
  }
  return out;
}

// Same check as first_violated_clause, over the flat store and a byte copy of
// the model; this runs after every solve, so it has to stay cheap.
std::optional<std::size_t> SatEngine::first_violated(const std::vector<bool>& model) const {
  std::vector<std::int8_t> value(model.size() * 2, 0);
  for (std::size_t v = 1; v < model.size(); ++v) value[2 * v + (model[v] ? 0 : 1)] = 1;
  const std::size_t count = starts_.size();
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t end = c + 1 < count ? starts_[c + 1] : literals_.size();
    bool satisfied = false;
    for (std::size_t k = starts_[c]; k < end; ++k) {
      const int lit = literals_[k];
      if (value[2 * static_cast<std::size_t>(lit < 0 ? -lit : lit) + (lit < 0 ? 1 : 0)]) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return c;
  }
  return std::nullopt;
}

SolveResult SatEngine::solve(const SolveLimits& limits) {
  ++solve_calls_;
  SolveResult result = run_solve(limits);
  if (result.status == Status::sat) {
    if (result.model.size() != static_cast<std::size_t>(num_vars_) + 1) {
      throw std::logic_error(std::string(name()) + " returned a model of wrong size");
    }
    if (auto bad = first_violated(result.model)) {
      throw std::logic_error(std::string(name()) + " returned a model violating clause " + std::to_string(*bad));
    }
  } else {
    result.model.clear();
  }
  return result;
}

std::unique_ptr<SatEngine> new_store(int num_vars, EngineKind kind, const EngineOptions& options) {
  switch (kind) {
    case EngineKind::cdcl:
      return std::make_unique<CdclSolver>(num_vars, CdclSolver::Options{.seed = options.seed});
    case EngineKind::backtracking:
      return std::make_unique<BacktrackingSolver>(num_vars);
    case EngineKind::external:
      return std::make_unique<ExternalSolver>(num_vars, options.external_command);
  }
  throw std::invalid_argument("unknown engine kind");
}

}  // namespace canon::sat
