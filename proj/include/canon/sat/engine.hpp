#pragma once

#include <chrono>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace canon::sat {

using Clause = std::vector<int>;
using Clock = std::chrono::steady_clock;

/// Default seed for all engines; CLI runs may override it.
inline constexpr std::uint64_t kDefaultSeed = 20210517;

enum class Status { sat, unsat, unknown };

std::string_view to_string(Status status);

struct SolveResult {
  Status status = Status::unknown;
  /// Indexed by variable identifier; entry 0 is unused. Empty unless status is sat.
  std::vector<bool> model;

  [[nodiscard]] bool is_sat() const noexcept { return status == Status::sat; }
  [[nodiscard]] bool value(int var) const { return model.at(static_cast<std::size_t>(var)); }
};

struct SolveLimits {
  std::optional<Clock::time_point> deadline;
};

/// Index of the first clause not satisfied by `model`, or nullopt if all are.
/// A variable outside the model counts as false.
std::optional<std::size_t> first_violated_clause(std::span<const Clause> clauses, const std::vector<bool>& model);

/**
 * A monotonically growing clause store with a complete solve procedure.
 *
 * Clauses use DIMACS-style signed identifiers in [1, num_vars]. Clauses are
 * never removed. Adding the empty clause makes the store permanently UNSAT.
 * Every model returned by solve() has been re-checked against all clauses
 * added so far; a failing check throws std::logic_error.
 */
class SatEngine {
 public:
  explicit SatEngine(int num_vars);
  virtual ~SatEngine() = default;
  SatEngine(const SatEngine&) = delete;
  SatEngine& operator=(const SatEngine&) = delete;

  [[nodiscard]] int num_vars() const noexcept { return num_vars_; }
  [[nodiscard]] std::size_t num_clauses() const noexcept { return starts_.size(); }
  [[nodiscard]] std::span<const int> clause(std::size_t index) const;
  /// Copy of every clause added so far, in order.
  [[nodiscard]] std::vector<Clause> clauses() const;
  [[nodiscard]] std::uint64_t solve_calls() const noexcept { return solve_calls_; }

  void add_clause(std::span<const int> clause);
  void add_clause(std::initializer_list<int> clause) { add_clause(std::span<const int>(clause.begin(), clause.size())); }

  SolveResult solve(const SolveLimits& limits = {});

  [[nodiscard]] virtual std::string_view name() const = 0;

 protected:
  virtual void on_clause_added(std::span<const int> clause) = 0;
  virtual SolveResult run_solve(const SolveLimits& limits) = 0;

 private:
  [[nodiscard]] std::optional<std::size_t> first_violated(const std::vector<bool>& model) const;

  int num_vars_;
  // Clauses back to back; starts_[c] indexes the first literal of clause c.
  std::vector<int> literals_;
  std::vector<std::size_t> starts_;
  std::uint64_t solve_calls_ = 0;
};

enum class EngineKind { cdcl, backtracking, external };

struct EngineOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Command for EngineKind::external; the DIMACS file path is appended.
  std::string external_command;
};

/// Creates an empty store. Rejects num_vars < 1.
std::unique_ptr<SatEngine> new_store(int num_vars, EngineKind kind = EngineKind::cdcl, const EngineOptions& options = {});

}  // namespace canon::sat
