#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "canon/rhythm.hpp"

namespace canon {

/// A clause as DIMACS-style signed variable identifiers.
using Clause = std::vector<int>;

/**
 * Identifier layout of the encoding.
 *
 * x_i has identifier i + 1. Auxiliary variables follow, grouped by divisor d
 * (ascending), then residue i in [0, d-1], as consecutive triples (y, z, u).
 */
class VarMap {
 public:
  VarMap() = default;
  /// `divisors` empty means a tiling-only layout.
  VarMap(int n, std::vector<int> divisors);

  [[nodiscard]] int modulus() const noexcept { return n_; }
  [[nodiscard]] const std::vector<int>& divisors() const noexcept { return divisors_; }
  [[nodiscard]] int num_vars() const noexcept { return num_vars_; }
  [[nodiscard]] bool has_aux() const noexcept { return !divisors_.empty(); }

  [[nodiscard]] int x(int i) const;
  [[nodiscard]] int y(int d, int i) const;
  [[nodiscard]] int z(int d, int i) const;
  [[nodiscard]] int u(int d, int i) const;

  friend bool operator==(const VarMap&, const VarMap&) = default;

 private:
  [[nodiscard]] int aux_base(int d, int i) const;

  int n_ = 0;
  std::vector<int> divisors_;
  std::vector<int> offsets_;  // first aux identifier of each divisor block
  int num_vars_ = 0;
};

/// Circulant matrix T of A: column j is the characteristic vector of A shifted down by j.
struct CirculantSpec {
  int n = 0;
  std::vector<bool> first_column;

  static CirculantSpec of(const Rhythm& a);
  [[nodiscard]] bool entry(int row, int col) const;
};

struct CnfInstance {
  VarMap var_map;
  std::vector<Clause> clauses;
  Rhythm rhythm = Rhythm::empty(1);
  bool aperiodic = false;

  [[nodiscard]] int num_vars() const noexcept { return var_map.num_vars(); }
  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;
};

/// Exactly-one per instant, pairwise at-most-one; canonicalizes A first.
CnfInstance tiling_clauses(const Rhythm& a);

/// Tseitin clauses tying y, z, u to the residue chains, plus one "some u false" clause per d.
std::vector<Clause> aperiodicity_clauses(int n, const DivisorSet& divisors, const VarMap& vm);

CnfInstance encode(const Rhythm& a, bool aperiodic);

/// Decodes B from the x-part of a model indexed by identifier (index 0 unused).
Rhythm decode_complement(const VarMap& vm, const std::vector<bool>& model);

/// Expected clause count of tiling_clauses.
long long tiling_clause_count(int n, int rhythm_size);

/// Throws if a clause is empty, tautological or references an undeclared variable.
void check_well_formed(const CnfInstance& inst);

}  // namespace canon
