#include "canon/sat/cdcl_solver.hpp"

#include <algorithm>
#include <cmath>

namespace canon::sat {

namespace {

// Luby sequence scaled by y: 1 1 2 1 1 2 4 ...
double luby(double y, std::uint64_t x) {
  std::uint64_t size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

}  // namespace

CdclSolver::CdclSolver(int num_vars) : CdclSolver(num_vars, Options{}) {}

CdclSolver::CdclSolver(int num_vars, Options options)
    : SatEngine(num_vars), options_(options), rng_(options.seed) {
  const auto n = static_cast<std::size_t>(num_vars);
  watches_.resize(2 * n);
  assigns_.assign(n, 0);
  saved_phase_.assign(n, -1);
  level_.assign(n, 0);
  reason_.assign(n, kNoReason);
  activity_.assign(n, 0.0);
  heap_index_.assign(n, -1);
  seen_.assign(n, 0);
  for (int v = 0; v < num_vars; ++v) heap_insert(v);
}

void CdclSolver::on_clause_added(std::span<const int> clause) {
  if (!ok_) return;
  cancel_until(0);

  std::vector<Lit> lits;
  lits.reserve(clause.size());
  for (int ext : clause) lits.push_back(make_lit((ext < 0 ? -ext : ext) - 1, ext < 0));
  std::sort(lits.begin(), lits.end());

  // Drop duplicates and level-0 false literals; skip satisfied or tautological clauses.
  std::vector<Lit> kept;
  Lit prev = kUndefLit;
  for (Lit l : lits) {
    if (l == prev) continue;
    if (prev != kUndefLit && l == negate(prev)) return;
    if (value(l) > 0) return;
    if (value(l) == 0) kept.push_back(l);
    prev = l;
  }

  if (kept.empty()) {
    ok_ = false;
  } else if (kept.size() == 1) {
    enqueue(kept[0], kNoReason);
    if (propagate() != kNoReason) ok_ = false;
  } else {
    attach(store_clause(std::move(kept), false));
    ++original_count_;
  }
}

CdclSolver::CRef CdclSolver::store_clause(std::vector<Lit> lits, bool learnt) {
  CRef cref;
  if (!free_slots_.empty()) {
    cref = free_slots_.back();
    free_slots_.pop_back();
    clause_db_[cref] = ClauseData{std::move(lits), 0.0, learnt, false};
  } else {
    cref = static_cast<CRef>(clause_db_.size());
    clause_db_.push_back(ClauseData{std::move(lits), 0.0, learnt, false});
  }
  if (learnt) learnts_.push_back(cref);
  return cref;
}

void CdclSolver::attach(CRef cref) {
  const auto& lits = clause_db_[cref].lits;
  watches_[lits[0]].push_back({cref, lits[1]});
  watches_[lits[1]].push_back({cref, lits[0]});
}

void CdclSolver::enqueue(Lit l, CRef reason) {
  const auto v = static_cast<std::size_t>(var_of(l));
  assigns_[v] = is_neg(l) ? -1 : 1;
  level_[v] = decision_level();
  reason_[v] = reason;
  trail_.push_back(l);
}

CdclSolver::CRef CdclSolver::propagate() {
  CRef conflict = kNoReason;
  while (qhead_ < trail_.size()) {
    const Lit false_lit = negate(trail_[qhead_++]);
    auto& ws = watches_[false_lit];
    ++stats_.propagations;

    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ws.size()) {
      const Watcher w = ws[i++];
      if (value(w.blocker) > 0) {
        ws[j++] = w;
        continue;
      }
      auto& lits = clause_db_[w.cref].lits;
      if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
      const Lit first = lits[0];
      if (first != w.blocker && value(first) > 0) {
        ws[j++] = {w.cref, first};
        continue;
      }

      bool moved = false;
      for (std::size_t k = 2; k < lits.size(); ++k) {
        if (value(lits[k]) >= 0) {
          std::swap(lits[1], lits[k]);
          watches_[lits[1]].push_back({w.cref, first});
          moved = true;
          break;
        }
      }
      if (moved) continue;

      ws[j++] = {w.cref, first};
      if (value(first) < 0) {
        conflict = w.cref;
        qhead_ = trail_.size();
        while (i < ws.size()) ws[j++] = ws[i++];
      } else {
        enqueue(first, w.cref);
      }
    }
    ws.resize(j);
    if (conflict != kNoReason) break;
  }
  return conflict;
}

bool CdclSolver::redundant(Lit l) const {
  const CRef r = reason_[static_cast<std::size_t>(var_of(l))];
  if (r == kNoReason) return false;
  const auto& lits = clause_db_[r].lits;
  for (std::size_t k = 1; k < lits.size(); ++k) {
    const auto v = static_cast<std::size_t>(var_of(lits[k]));
    if (!seen_[v] && level_[v] > 0) return false;
  }
  return true;
}

void CdclSolver::analyze(CRef conflict, std::vector<Lit>& learnt, int& backtrack_level) {
  learnt.clear();
  learnt.push_back(kUndefLit);
  int pending = 0;
  Lit p = kUndefLit;
  std::size_t index = trail_.size();
  CRef reason = conflict;

  do {
    auto& c = clause_db_[reason];
    if (c.learnt) bump_clause(c);
    for (std::size_t k = (p == kUndefLit ? 0 : 1); k < c.lits.size(); ++k) {
      const Lit q = c.lits[k];
      const auto v = static_cast<std::size_t>(var_of(q));
      if (seen_[v] || level_[v] == 0) continue;
      bump_var(static_cast<int>(v));
      seen_[v] = 1;
      if (level_[v] >= decision_level()) {
        ++pending;
      } else {
        learnt.push_back(q);
      }
    }
    do {
      --index;
    } while (!seen_[static_cast<std::size_t>(var_of(trail_[index]))]);
    p = trail_[index];
    reason = reason_[static_cast<std::size_t>(var_of(p))];
    seen_[static_cast<std::size_t>(var_of(p))] = 0;
    --pending;
  } while (pending > 0);
  learnt[0] = negate(p);

  const std::vector<Lit> before = learnt;
  std::size_t keep = 1;
  for (std::size_t k = 1; k < learnt.size(); ++k) {
    if (!redundant(learnt[k])) learnt[keep++] = learnt[k];
  }
  learnt.resize(keep);

  backtrack_level = 0;
  if (learnt.size() > 1) {
    std::size_t max_at = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k) {
      if (level_[static_cast<std::size_t>(var_of(learnt[k]))] > level_[static_cast<std::size_t>(var_of(learnt[max_at]))]) {
        max_at = k;
      }
    }
    std::swap(learnt[1], learnt[max_at]);
    backtrack_level = level_[static_cast<std::size_t>(var_of(learnt[1]))];
  }
  for (Lit l : before) seen_[static_cast<std::size_t>(var_of(l))] = 0;
}

void CdclSolver::cancel_until(int level) {
  if (decision_level() <= level) return;
  const auto stop = static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(level)]);
  for (std::size_t k = trail_.size(); k-- > stop;) {
    const auto v = static_cast<std::size_t>(var_of(trail_[k]));
    saved_phase_[v] = assigns_[v];
    assigns_[v] = 0;
    reason_[v] = kNoReason;
    heap_insert(static_cast<int>(v));
  }
  trail_.resize(stop);
  trail_lim_.resize(static_cast<std::size_t>(level));
  qhead_ = trail_.size();
}

CdclSolver::Lit CdclSolver::pick_branch_lit() {
  int next = -1;
  if (!heap_.empty() && std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < options_.random_decision_freq) {
    next = heap_[std::uniform_int_distribution<std::size_t>(0, heap_.size() - 1)(rng_)];
    if (assigns_[static_cast<std::size_t>(next)] != 0) next = -1;
  }
  while (next < 0 || assigns_[static_cast<std::size_t>(next)] != 0) {
    if (heap_.empty()) return kUndefLit;
    next = heap_pop();
  }
  return make_lit(next, saved_phase_[static_cast<std::size_t>(next)] <= 0);
}

bool CdclSolver::locked(CRef cref) const {
  const auto& lits = clause_db_[cref].lits;
  const auto v = static_cast<std::size_t>(var_of(lits[0]));
  return reason_[v] == cref && value(lits[0]) > 0;
}

void CdclSolver::reduce_db() {
  std::sort(learnts_.begin(), learnts_.end(), [&](CRef a, CRef b) {
    const auto& ca = clause_db_[a];
    const auto& cb = clause_db_[b];
    if (ca.activity != cb.activity) return ca.activity < cb.activity;
    return a < b;
  });
  const std::size_t half = learnts_.size() / 2;
  std::size_t j = 0;
  for (std::size_t i = 0; i < learnts_.size(); ++i) {
    const CRef cref = learnts_[i];
    auto& c = clause_db_[cref];
    if (i < half && c.lits.size() > 2 && !locked(cref)) {
      c.deleted = true;
      ++stats_.learnt_deleted;
    } else {
      learnts_[j++] = cref;
    }
  }
  learnts_.resize(j);
  for (auto& ws : watches_) {
    std::erase_if(ws, [&](const Watcher& w) { return clause_db_[w.cref].deleted; });
  }
  for (CRef cref = 0; cref < clause_db_.size(); ++cref) {
    auto& c = clause_db_[cref];
    if (c.deleted && !c.lits.empty()) {
      c.lits.clear();
      c.lits.shrink_to_fit();
      free_slots_.push_back(cref);
    }
  }
}

Status CdclSolver::search(std::uint64_t conflict_budget, const SolveLimits& limits) {
  std::uint64_t conflicts_here = 0;
  std::vector<Lit> learnt;
  while (true) {
    const CRef conflict = propagate();
    if (conflict != kNoReason) {
      ++stats_.conflicts;
      ++conflicts_here;
      if (decision_level() == 0) return Status::unsat;

      int backtrack_level = 0;
      analyze(conflict, learnt, backtrack_level);
      cancel_until(backtrack_level);
      if (learnt.size() == 1) {
        enqueue(learnt[0], kNoReason);
      } else {
        const CRef cref = store_clause(learnt, true);
        attach(cref);
        bump_clause(clause_db_[cref]);
        enqueue(learnt[0], cref);
      }
      var_inc_ /= options_.var_decay;
      clause_inc_ /= options_.clause_decay;

      if (limits.deadline && (stats_.conflicts & 255u) == 0 && Clock::now() >= *limits.deadline) {
        return Status::unknown;
      }
      continue;
    }

    if (conflicts_here >= conflict_budget) {
      cancel_until(0);
      return Status::unknown;
    }
    if (static_cast<double>(learnts_.size()) - static_cast<double>(trail_.size()) >= max_learnts_) {
      reduce_db();
      max_learnts_ *= 1.1;
    }

    const Lit next = pick_branch_lit();
    if (next == kUndefLit) return Status::sat;
    ++stats_.decisions;
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    enqueue(next, kNoReason);
  }
}

SolveResult CdclSolver::run_solve(const SolveLimits& limits) {
  SolveResult result;
  if (!ok_) {
    result.status = Status::unsat;
    return result;
  }
  max_learnts_ = std::max(5000.0, static_cast<double>(original_count_) / 3.0);

  Status status = Status::unknown;
  for (std::uint64_t round = 0;; ++round) {
    const auto budget = static_cast<std::uint64_t>(luby(2.0, round) * options_.restart_base);
    status = search(budget, limits);
    if (status != Status::unknown) break;
    ++stats_.restarts;
    if (limits.deadline && Clock::now() >= *limits.deadline) break;
  }

  if (status == Status::sat) {
    result.model.assign(static_cast<std::size_t>(num_vars()) + 1, false);
    for (int v = 0; v < num_vars(); ++v) result.model[static_cast<std::size_t>(v) + 1] = assigns_[static_cast<std::size_t>(v)] > 0;
  } else if (status == Status::unsat) {
    ok_ = false;
  }
  result.status = status;
  cancel_until(0);
  return result;
}

void CdclSolver::bump_var(int var) {
  const auto v = static_cast<std::size_t>(var);
  activity_[v] += var_inc_;
  if (activity_[v] > 1e100) {
    for (auto& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_index_[v] >= 0) heap_up(static_cast<std::size_t>(heap_index_[v]));
}

void CdclSolver::bump_clause(ClauseData& c) {
  c.activity += clause_inc_;
  if (c.activity > 1e20) {
    for (CRef cref : learnts_) clause_db_[cref].activity *= 1e-20;
    clause_inc_ *= 1e-20;
  }
}

bool CdclSolver::heap_before(int a, int b) const {
  const double aa = activity_[static_cast<std::size_t>(a)];
  const double ab = activity_[static_cast<std::size_t>(b)];
  return aa > ab || (aa == ab && a < b);
}

void CdclSolver::heap_insert(int var) {
  if (heap_index_[static_cast<std::size_t>(var)] >= 0) return;
  heap_index_[static_cast<std::size_t>(var)] = static_cast<int>(heap_.size());
  heap_.push_back(var);
  heap_up(heap_.size() - 1);
}

void CdclSolver::heap_up(std::size_t pos) {
  const int var = heap_[pos];
  while (pos > 0) {
    const std::size_t parent = (pos - 1) / 2;
    if (!heap_before(var, heap_[parent])) break;
    heap_[pos] = heap_[parent];
    heap_index_[static_cast<std::size_t>(heap_[pos])] = static_cast<int>(pos);
    pos = parent;
  }
  heap_[pos] = var;
  heap_index_[static_cast<std::size_t>(var)] = static_cast<int>(pos);
}

void CdclSolver::heap_down(std::size_t pos) {
  const int var = heap_[pos];
  while (true) {
    std::size_t child = 2 * pos + 1;
    if (child >= heap_.size()) break;
    if (child + 1 < heap_.size() && heap_before(heap_[child + 1], heap_[child])) ++child;
    if (!heap_before(heap_[child], var)) break;
    heap_[pos] = heap_[child];
    heap_index_[static_cast<std::size_t>(heap_[pos])] = static_cast<int>(pos);
    pos = child;
  }
  heap_[pos] = var;
  heap_index_[static_cast<std::size_t>(var)] = static_cast<int>(pos);
}

int CdclSolver::heap_pop() {
  const int top = heap_.front();
  heap_index_[static_cast<std::size_t>(top)] = -1;
  const int last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_index_[static_cast<std::size_t>(last)] = 0;
    heap_down(0);
  }
  return top;
}

}  // namespace canon::sat
