#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "canon/sat/engine.hpp"

namespace canon::sat {

/**
 * Conflict-driven clause-learning solver.
 *
 * Two-watched-literal propagation, first-UIP learning with local
 * minimization, VSIDS branching with phase saving, Luby restarts and
 * activity-based learnt clause deletion. Clauses may be added between
 * solve() calls; learnt clauses are kept across calls.
 *
 * Branching ties go to the lower variable index, the initial polarity is
 * false, and random decisions are drawn from a generator seeded by
 * Options::seed, so identical call sequences give identical models.
 */
class CdclSolver final : public SatEngine {
 public:
  struct Options {
    std::uint64_t seed = kDefaultSeed;
    double random_decision_freq = 0.01;
    double var_decay = 0.95;
    double clause_decay = 0.999;
    int restart_base = 100;
  };

  struct Stats {
    std::uint64_t conflicts = 0;
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t restarts = 0;
    std::uint64_t learnt_deleted = 0;
  };

  explicit CdclSolver(int num_vars);
  CdclSolver(int num_vars, Options options);

  [[nodiscard]] std::string_view name() const override { return "cdcl"; }
  [[nodiscard]] const Stats& stats() const noexcept { return stats_; }

 protected:
  void on_clause_added(std::span<const int> clause) override;
  SolveResult run_solve(const SolveLimits& limits) override;

 private:
  // Literal code: 2 * var + (negated ? 1 : 0), var 0-based.
  using Lit = std::uint32_t;
  using CRef = std::uint32_t;
  static constexpr CRef kNoReason = 0xffffffffu;
  static constexpr Lit kUndefLit = 0xffffffffu;

  struct ClauseData {
    std::vector<Lit> lits;
    double activity = 0.0;
    bool learnt = false;
    bool deleted = false;
  };

  struct Watcher {
    CRef cref;
    Lit blocker;
  };

  static Lit make_lit(int var, bool negated) { return static_cast<Lit>(2 * var + (negated ? 1 : 0)); }
  static int var_of(Lit l) { return static_cast<int>(l >> 1); }
  static bool is_neg(Lit l) { return (l & 1u) != 0; }
  static Lit negate(Lit l) { return l ^ 1u; }

  // +1 true, -1 false, 0 unassigned.
  [[nodiscard]] int value(Lit l) const {
    const int v = assigns_[static_cast<std::size_t>(var_of(l))];
    return is_neg(l) ? -v : v;
  }
  [[nodiscard]] int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  CRef store_clause(std::vector<Lit> lits, bool learnt);
  void attach(CRef cref);
  void enqueue(Lit l, CRef reason);
  CRef propagate();
  void analyze(CRef conflict, std::vector<Lit>& learnt, int& backtrack_level);
  [[nodiscard]] bool redundant(Lit l) const;
  void cancel_until(int level);
  Lit pick_branch_lit();
  Status search(std::uint64_t conflict_budget, const SolveLimits& limits);
  void reduce_db();
  [[nodiscard]] bool locked(CRef cref) const;

  void bump_var(int var);
  void bump_clause(ClauseData& c);
  void heap_insert(int var);
  void heap_up(std::size_t pos);
  void heap_down(std::size_t pos);
  int heap_pop();
  [[nodiscard]] bool heap_before(int a, int b) const;

  Options options_;
  Stats stats_;
  std::mt19937_64 rng_;
  bool ok_ = true;

  std::vector<ClauseData> clause_db_;
  std::vector<CRef> free_slots_;
  std::vector<CRef> learnts_;
  std::vector<std::vector<Watcher>> watches_;  // by literal code: clauses watching that literal
  std::size_t original_count_ = 0;
  double max_learnts_ = 0.0;

  std::vector<std::int8_t> assigns_;
  std::vector<std::int8_t> saved_phase_;
  std::vector<int> level_;
  std::vector<CRef> reason_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<double> activity_;
  double var_inc_ = 1.0;
  double clause_inc_ = 1.0;
  std::vector<int> heap_;
  std::vector<int> heap_index_;  // -1 when absent

  std::vector<char> seen_;
};

}  // namespace canon::sat
