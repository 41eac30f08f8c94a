#include <algorithm>
#include <limits>

#include "canon/enumerate.hpp"
#include "cover_search.hpp"

namespace canon {

namespace {

/// Search state: P (chosen offsets) and the disjoint union of the translates A + b, b in P.
struct PartialCover {
  std::vector<int> offsets;
  detail::Cover covered;
  int covered_count = 0;
};

class FillOut {
 public:
  FillOut(const Rhythm& a, detail::SearchBudget& budget)
      : a_(a), n_(a.modulus()), masks_(detail::translate_masks(a)), state_{{}, detail::Cover(n_), 0}, budget_(budget) {}

  std::vector<Rhythm> run() {
    place(0);
    search();
    return std::move(found_);
  }

 private:
  void place(int b) {
    state_.covered.merge(masks_[static_cast<std::size_t>(b)]);
    state_.covered_count += static_cast<int>(a_.size());
    state_.offsets.push_back(b);
  }
  void unplace(int b) {
    state_.covered.remove(masks_[static_cast<std::size_t>(b)]);
    state_.covered_count -= static_cast<int>(a_.size());
    state_.offsets.pop_back();
  }

  // Offsets b with x in A + b and A + b disjoint from the cover; their count is r(x, P).
  void admissible(int x, std::vector<int>& out) const {
    out.clear();
    for (int e : a_.elements()) {
      const int b = ((x - e) % n_ + n_) % n_;
      if (state_.covered.disjoint(masks_[static_cast<std::size_t>(b)])) out.push_back(b);
    }
  }

  void search() {
    if (!budget_.tick()) return;
    if (state_.covered_count == n_) {
      found_.emplace_back(n_, state_.offsets);
      return;
    }

    std::size_t best_rank = std::numeric_limits<std::size_t>::max();
    std::vector<int> candidates;
    std::vector<int> scratch;
    for (int x = 0; x < n_; ++x) {
      if (state_.covered.test(x)) continue;
      admissible(x, scratch);
      if (scratch.size() < best_rank) {
        best_rank = scratch.size();
        candidates.swap(scratch);
        if (best_rank == 0) return;  // x can no longer be covered
      }
    }

    std::sort(candidates.begin(), candidates.end());
    for (int b : candidates) {
      place(b);
      search();
      unplace(b);
      if (budget_.expired()) return;
    }
  }

  const Rhythm& a_;
  int n_;
  std::vector<detail::Cover> masks_;
  PartialCover state_;
  detail::SearchBudget& budget_;
  std::vector<Rhythm> found_;
};

}  // namespace

EnumerationReport enumerate_fill_out(const Rhythm& a, const EnumerationOptions& options) {
  const auto start = sat::Clock::now();
  if (a.is_empty()) throw RhythmError("enumerate_fill_out: empty rhythm");
  EnumerationReport report;
  report.method = Method::fill_out;
  report.n = a.modulus();
  report.rhythm = canonicalize(a);
  report.aperiodic = options.aperiodic;
  if (report.n % static_cast<int>(a.size()) == 0) {
    std::optional<sat::Clock::time_point> deadline;
    if (options.time_limit) deadline = start + *options.time_limit;
    detail::SearchBudget budget(options.node_limit, deadline);
    const auto complements = FillOut(report.rhythm, budget).run();
    report.raw_solution_count = complements.size();
    report.classes = detail::reduce_to_classes(complements, options.aperiodic);
    report.solver_calls = budget.nodes();
    report.complete = !budget.expired();
  }
  report.elapsed = sat::Clock::now() - start;
  return report;
}

}  // namespace canon
