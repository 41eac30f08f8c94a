#include "canon/encoder.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace canon {

VarMap::VarMap(int n, std::vector<int> divisors) : n_(n), divisors_(std::move(divisors)) {
  if (n_ < 1) throw std::invalid_argument("VarMap: modulus must be positive");
  std::sort(divisors_.begin(), divisors_.end());
  int next = n_ + 1;
  for (int d : divisors_) {
    if (d < 1 || n_ % d != 0) throw std::invalid_argument("VarMap: " + std::to_string(d) + " does not divide n");
    offsets_.push_back(next);
    next += 3 * d;
  }
  num_vars_ = next - 1;
}

int VarMap::x(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("VarMap::x index " + std::to_string(i));
  return i + 1;
}

int VarMap::aux_base(int d, int i) const {
  auto it = std::lower_bound(divisors_.begin(), divisors_.end(), d);
  if (it == divisors_.end() || *it != d) throw std::out_of_range("VarMap: no divisor " + std::to_string(d));
  if (i < 0 || i >= d) throw std::out_of_range("VarMap: residue " + std::to_string(i) + " out of range");
  return offsets_[static_cast<std::size_t>(it - divisors_.begin())] + 3 * i;
}

int VarMap::y(int d, int i) const { return aux_base(d, i); }
int VarMap::z(int d, int i) const { return aux_base(d, i) + 1; }
int VarMap::u(int d, int i) const { return aux_base(d, i) + 2; }

CirculantSpec CirculantSpec::of(const Rhythm& a) { return CirculantSpec{a.modulus(), a.indicator()}; }

bool CirculantSpec::entry(int row, int col) const {
  const int src = ((row - col) % n + n) % n;
  return first_column[static_cast<std::size_t>(src)];
}

long long tiling_clause_count(int n, int rhythm_size) {
  const long long k = rhythm_size;
  return static_cast<long long>(n) * (1 + k * (k - 1) / 2);
}

namespace {

// Offsets b with T[i][b] = 1, i.e. instant i lies in A + b.
std::vector<int> covering_offsets(const Rhythm& a, int i) {
  const int n = a.modulus();
  std::vector<int> out;
  out.reserve(a.size());
  for (int j : a.elements()) out.push_back(((i - j) % n + n) % n);
  return out;
}

void add_tiling(const Rhythm& a, const VarMap& vm, std::vector<Clause>& out) {
  const int n = a.modulus();
  for (int i = 0; i < n; ++i) {
    const auto offsets = covering_offsets(a, i);
    Clause at_least_one;
    for (int b : offsets) at_least_one.push_back(vm.x(b));
    out.push_back(std::move(at_least_one));
    for (std::size_t k = 0; k < offsets.size(); ++k) {
      for (std::size_t l = k + 1; l < offsets.size(); ++l) out.push_back({-vm.x(offsets[k]), -vm.x(offsets[l])});
    }
  }
}

}  // namespace

CnfInstance tiling_clauses(const Rhythm& a) {
  if (a.is_empty()) throw RhythmError("tiling_clauses: empty rhythm");
  CnfInstance inst;
  inst.rhythm = canonicalize(a);
  inst.var_map = VarMap(a.modulus(), {});
  add_tiling(inst.rhythm, inst.var_map, inst.clauses);
  return inst;
}

std::vector<Clause> aperiodicity_clauses(int n, const DivisorSet& divisors, const VarMap& vm) {
  std::vector<Clause> out;
  for (int d : divisors.maximal_divisors) {
    const int chain_length = n / d;
    Clause some_u_false;
    for (int i = 0; i < d; ++i) {
      const int y = vm.y(d, i);
      const int z = vm.z(d, i);
      const int u = vm.u(d, i);
      Clause y_back{y};
      Clause z_back{z};
      for (int k = 0; k < chain_length; ++k) {
        const int xv = vm.x(i + k * d);
        out.push_back({-y, xv});
        out.push_back({-z, -xv});
        y_back.push_back(-xv);
        z_back.push_back(xv);
      }
      out.push_back(std::move(y_back));
      out.push_back(std::move(z_back));
      out.push_back({-u, y, z});
      out.push_back({u, -y});
      out.push_back({u, -z});
      some_u_false.push_back(-u);
    }
    out.push_back(std::move(some_u_false));
  }
  return out;
}

CnfInstance encode(const Rhythm& a, bool aperiodic) {
  if (a.is_empty()) throw RhythmError("encode: empty rhythm");
  const int n = a.modulus();
  // Z_1 has no nonzero shift, so there is nothing to exclude.
  const bool with_aux = aperiodic && n >= 2;
  DivisorSet divisors;
  if (with_aux) divisors = maximal_divisors(n);

  CnfInstance inst;
  inst.rhythm = canonicalize(a);
  inst.aperiodic = aperiodic;
  inst.var_map = VarMap(n, with_aux ? divisors.maximal_divisors : std::vector<int>{});
  add_tiling(inst.rhythm, inst.var_map, inst.clauses);
  if (with_aux) {
    auto extra = aperiodicity_clauses(n, divisors, inst.var_map);
    inst.clauses.insert(inst.clauses.end(), std::make_move_iterator(extra.begin()),
                        std::make_move_iterator(extra.end()));
  }
  return inst;
}

Rhythm decode_complement(const VarMap& vm, const std::vector<bool>& model) {
  std::vector<int> elements;
  for (int i = 0; i < vm.modulus(); ++i) {
    const auto id = static_cast<std::size_t>(vm.x(i));
    if (id < model.size() && model[id]) elements.push_back(i);
  }
  return Rhythm(vm.modulus(), std::move(elements));
}

void check_well_formed(const CnfInstance& inst) {
  const int v = inst.num_vars();
  for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
    const auto& clause = inst.clauses[c];
    if (clause.empty()) throw std::logic_error("clause " + std::to_string(c) + " is empty");
    std::unordered_set<int> seen;
    for (int lit : clause) {
      if (lit == 0 || lit > v || -lit > v) {
        throw std::logic_error("clause " + std::to_string(c) + " references undeclared variable " + std::to_string(lit));
      }
      if (seen.count(-lit)) throw std::logic_error("clause " + std::to_string(c) + " is tautological");
      seen.insert(lit);
    }
  }
}

}  // namespace canon
