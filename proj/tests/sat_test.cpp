#include <random>

#include <gtest/gtest.h>

#include "canon/sat/backtracking_solver.hpp"
#include "canon/sat/cdcl_solver.hpp"
#include "canon/sat/external_solver.hpp"
#include "oracles.hpp"

namespace canon::sat {
namespace {

std::vector<Clause> random_cnf(std::mt19937& rng, int num_vars, int num_clauses, int max_width) {
  std::uniform_int_distribution<int> var(1, num_vars);
  std::uniform_int_distribution<int> width(1, max_width);
  std::vector<Clause> out;
  for (int c = 0; c < num_clauses; ++c) {
    Clause clause;
    const int w = width(rng);
    for (int k = 0; k < w; ++k) clause.push_back(rng() % 2 ? var(rng) : -var(rng));
    out.push_back(clause);
  }
  return out;
}

// Counts models by repeatedly solving and blocking the full assignment.
std::uint64_t count_by_blocking(SatEngine& engine) {
  std::uint64_t count = 0;
  for (;;) {
    const SolveResult r = engine.solve();
    if (r.status == Status::unsat) return count;
    EXPECT_EQ(r.status, Status::sat);
    ++count;
    Clause block;
    for (int v = 1; v <= engine.num_vars(); ++v) block.push_back(r.value(v) ? -v : v);
    engine.add_clause(block);
  }
}

std::string external_command() { return std::string(CANON_CLI_PATH) + " solve"; }

class EngineTest : public ::testing::TestWithParam<EngineKind> {
 protected:
  std::unique_ptr<SatEngine> make(int num_vars, std::uint64_t seed = kDefaultSeed) const {
    EngineOptions options;
    options.seed = seed;
    options.external_command = external_command();
    return new_store(num_vars, GetParam(), options);
  }
};

TEST_P(EngineTest, SmallExamples) {
  auto s = make(3);
  s->add_clause({1, 2});
  s->add_clause({-1});
  SolveResult r = s->solve();
  ASSERT_EQ(r.status, Status::sat);
  EXPECT_FALSE(r.value(1));
  EXPECT_TRUE(r.value(2));
  s->add_clause({-2});
  EXPECT_EQ(s->solve().status, Status::unsat);
  EXPECT_EQ(s->solve().status, Status::unsat);
  EXPECT_EQ(s->solve_calls(), 3u);
}

TEST_P(EngineTest, EmptyClauseMakesStoreUnsat) {
  auto s = make(2);
  s->add_clause(std::span<const int>{});
  EXPECT_EQ(s->solve().status, Status::unsat);
}

TEST_P(EngineTest, TautologyAndDuplicatesAreHarmless) {
  auto s = make(2);
  s->add_clause({1, -1});
  s->add_clause({2, 2});
  const SolveResult r = s->solve();
  ASSERT_EQ(r.status, Status::sat);
  EXPECT_TRUE(r.value(2));
}

TEST_P(EngineTest, RejectsOutOfRangeLiterals) {
  auto s = make(2);
  EXPECT_THROW(s->add_clause({3}), std::out_of_range);
  EXPECT_THROW(s->add_clause({0}), std::out_of_range);
  EXPECT_THROW(make(0), std::invalid_argument);
}

TEST_P(EngineTest, BlockingEnumeratesEveryModel) {
  // x1 xor x2, x3 -> x4, with x5 free: 2 * 3 * 2 models.
  auto s = make(5);
  s->add_clause({1, 2});
  s->add_clause({-1, -2});
  s->add_clause({-3, 4});
  const std::vector<Clause> clauses = s->clauses();
  EXPECT_EQ(count_by_blocking(*s), oracle::count_models(clauses, 5));
  EXPECT_EQ(oracle::count_models(clauses, 5), 12u);
}

TEST_P(EngineTest, RandomInstancesAgreeWithExhaustiveSearch) {
  std::mt19937 rng(42);
  const int trials = GetParam() == EngineKind::external ? 15 : 150;
  for (int trial = 0; trial < trials; ++trial) {
    const int num_vars = std::uniform_int_distribution<int>(1, GetParam() == EngineKind::external ? 8 : 14)(rng);
    const int num_clauses = std::uniform_int_distribution<int>(1, 5 * num_vars)(rng);
    const auto clauses = random_cnf(rng, num_vars, num_clauses, 3);
    auto s = make(num_vars, static_cast<std::uint64_t>(trial));
    for (const auto& c : clauses) s->add_clause(c);
    const std::uint64_t models = oracle::count_models(clauses, num_vars);
    const SolveResult r = s->solve();
    ASSERT_EQ(r.status, models > 0 ? Status::sat : Status::unsat) << "trial " << trial;
    if (r.is_sat()) {
      EXPECT_TRUE(oracle::satisfies(clauses, r.model));
    }
    if (GetParam() != EngineKind::external && num_vars <= 10) {
      EXPECT_EQ(count_by_blocking(*s), models) << "trial " << trial;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Engines, EngineTest,
                         ::testing::Values(EngineKind::cdcl, EngineKind::backtracking, EngineKind::external),
                         [](const auto& info) {
                           switch (info.param) {
                             case EngineKind::cdcl: return std::string("Cdcl");
                             case EngineKind::backtracking: return std::string("Backtracking");
                             case EngineKind::external: return std::string("External");
                           }
                           return std::string("Unknown");
                         });

TEST(CdclSolverTest, DifferentialAgainstBacktracking) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const int num_vars = std::uniform_int_distribution<int>(10, 40)(rng);
    const int num_clauses = static_cast<int>(num_vars * 4.26);
    const auto clauses = random_cnf(rng, num_vars, num_clauses, 3);
    CdclSolver cdcl(num_vars);
    BacktrackingSolver reference(num_vars);
    for (const auto& c : clauses) {
      cdcl.add_clause(c);
      reference.add_clause(c);
    }
    const SolveResult a = cdcl.solve();
    const SolveResult b = reference.solve();
    ASSERT_EQ(a.status, b.status) << "trial " << trial;
    if (a.is_sat()) {
      EXPECT_TRUE(oracle::satisfies(clauses, a.model));
    }
  }
}

TEST(CdclSolverTest, PigeonholeIsUnsat) {
  // 7 pigeons, 6 holes: needs many conflicts, so learning, restarts and
  // deletion all run.
  const int pigeons = 7;
  const int holes = 6;
  auto var = [&](int p, int h) { return p * holes + h + 1; };
  CdclSolver s(pigeons * holes);
  for (int p = 0; p < pigeons; ++p) {
    Clause c;
    for (int h = 0; h < holes; ++h) c.push_back(var(p, h));
    s.add_clause(c);
  }
  for (int h = 0; h < holes; ++h) {
    for (int p = 0; p < pigeons; ++p) {
      for (int q = p + 1; q < pigeons; ++q) s.add_clause({-var(p, h), -var(q, h)});
    }
  }
  EXPECT_EQ(s.solve().status, Status::unsat);
  EXPECT_GT(s.stats().conflicts, 100u);
  EXPECT_GT(s.stats().restarts, 0u);
}

TEST(CdclSolverTest, SameSeedSameModels) {
  std::mt19937 rng(99);
  std::vector<Clause> clauses;
  for (const auto& c : random_cnf(rng, 60, 600, 3)) {
    if (c.size() == 3 && clauses.size() < 200) clauses.push_back(c);
  }
  auto run = [&](std::uint64_t seed) {
    CdclSolver::Options options;
    options.seed = seed;
    options.random_decision_freq = 0.2;
    CdclSolver s(60, options);
    for (const auto& c : clauses) s.add_clause(c);
    std::vector<std::vector<bool>> models;
    for (int k = 0; k < 20; ++k) {
      const SolveResult r = s.solve();
      if (!r.is_sat()) break;
      models.push_back(r.model);
      Clause block;
      for (int v = 1; v <= 60; ++v) block.push_back(r.value(v) ? -v : v);
      s.add_clause(block);
    }
    return models;
  };
  const auto first = run(7);
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, run(7));
}

TEST(CdclSolverTest, DeadlineInThePastGivesUnknownOrAnswer) {
  const int pigeons = 10;
  const int holes = 9;
  auto var = [&](int p, int h) { return p * holes + h + 1; };
  CdclSolver s(pigeons * holes);
  for (int p = 0; p < pigeons; ++p) {
    Clause c;
    for (int h = 0; h < holes; ++h) c.push_back(var(p, h));
    s.add_clause(c);
  }
  for (int h = 0; h < holes; ++h) {
    for (int p = 0; p < pigeons; ++p) {
      for (int q = p + 1; q < pigeons; ++q) s.add_clause({-var(p, h), -var(q, h)});
    }
  }
  SolveLimits limits;
  limits.deadline = Clock::now();
  EXPECT_EQ(s.solve(limits).status, Status::unknown);
}

TEST(FirstViolatedClauseTest, Basics) {
  const std::vector<Clause> clauses{{1, 2}, {-1}, {2, -3}};
  EXPECT_EQ(first_violated_clause(clauses, {false, false, true, false}), std::nullopt);
  EXPECT_EQ(first_violated_clause(clauses, {false, true, true, false}), 1u);
  EXPECT_EQ(first_violated_clause(clauses, {false, false, false, false}), 0u);
}

TEST(ExternalSolverTest, ParseOutput) {
  SolveResult r = parse_solver_output("c comment\ns SATISFIABLE\nv 1 -2\nv 3 0\n", 3);
  ASSERT_EQ(r.status, Status::sat);
  EXPECT_TRUE(r.value(1));
  EXPECT_FALSE(r.value(2));
  EXPECT_TRUE(r.value(3));
  EXPECT_EQ(parse_solver_output("s UNSATISFIABLE\n", 3).status, Status::unsat);
  EXPECT_EQ(parse_solver_output("s UNKNOWN\n", 3).status, Status::unknown);
  EXPECT_EQ(parse_solver_output("", 3).status, Status::unknown);
  // Unlisted variables default to false.
  r = parse_solver_output("s SATISFIABLE\nv 2 0\n", 3);
  ASSERT_TRUE(r.is_sat());
  EXPECT_FALSE(r.value(1));
  EXPECT_TRUE(r.value(2));
}

TEST(ExternalSolverTest, SilentCommandGivesUnknown) {
  ExternalSolver s(2, "true");
  s.add_clause({1});
  EXPECT_EQ(s.solve().status, Status::unknown);
  EXPECT_THROW(ExternalSolver(2, ""), std::invalid_argument);
}

}  // namespace
}  // namespace canon::sat
