#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "canon/rhythm.hpp"
#include "canon/sat/engine.hpp"

namespace canon {

enum class Method { sat, oracle, fill_out };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view text);

/// Thrown when a combinatorial search exceeds its node cap.
class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  /// Keep only aperiodic complements.
  bool aperiodic = true;
  sat::EngineKind engine = sat::EngineKind::cdcl;
  sat::EngineOptions engine_options;
  /// Wall-clock budget; an expired run returns a report with complete = false.
  std::optional<std::chrono::milliseconds> time_limit;
  /// Search-node cap for the oracle and Fill-Out searches.
  std::uint64_t node_limit = 2'000'000'000;
};

struct EnumerationReport {
  int n = 0;
  Rhythm rhythm = Rhythm::empty(1);
  Method method = Method::sat;
  bool aperiodic = true;
  /// Canonical translation-class representatives, sorted lexicographically.
  std::vector<Rhythm> classes;
  /// Complements found before periodicity filtering and deduplication. For the
  /// SAT method: the number of distinct complements excluded by the blocking
  /// clauses, i.e. the summed orbit sizes of the reported classes.
  std::uint64_t raw_solution_count = 0;
  std::chrono::nanoseconds elapsed{0};
  /// SAT calls (SAT method) or search nodes expanded (oracle, Fill-Out).
  std::uint64_t solver_calls = 0;
  bool complete = true;

  [[nodiscard]] std::size_t class_count() const noexcept { return classes.size(); }
};

/**
 * AllSAT enumeration over the CNF encoding.
 *
 * After each model, B is decoded, verified (tiling, and aperiodicity when
 * requested) and canonicalized; then one blocking clause per distinct
 * translate B + t is added, using only negative x-literals. Every
 * complement has exactly n/|A| elements, so the clause excludes precisely
 * that translate. The loop ends at the first UNSAT answer.
 *
 * Throws std::logic_error if a decoded model fails verification.
 */
EnumerationReport enumerate_sat(const Rhythm& a, const EnumerationOptions& options = {});

/// Exact-cover depth-first search branching on the smallest uncovered instant.
EnumerationReport enumerate_oracle(const Rhythm& a, const EnumerationOptions& options = {});

/**
 * Fill-Out search: starts from P = {0} and always expands the uncovered
 * instant with the fewest admissible coverings r(x, P) (ties: smallest x),
 * trying its covering offsets in ascending order. Periodic solutions and
 * translates are removed afterwards.
 */
EnumerationReport enumerate_fill_out(const Rhythm& a, const EnumerationOptions& options = {});

EnumerationReport enumerate(Method method, const Rhythm& a, const EnumerationOptions& options = {});

/// Every complement B with A (+) B = Z_n, translates included, in discovery order.
std::vector<Rhythm> all_complements(const Rhythm& a, std::uint64_t node_limit = 2'000'000'000);

struct CrossValidation {
  bool agree = false;
  EnumerationReport sat;
  EnumerationReport oracle;
  EnumerationReport fill_out;
};

/// Runs all three methods with the same options (aperiodic filter on by default) and compares their class sets.
CrossValidation cross_validate(const Rhythm& a, const EnumerationOptions& options = {});

}  // namespace canon
