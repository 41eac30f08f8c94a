#include <set>

#include "canon/enumerate.hpp"
#include "cover_search.hpp"

namespace canon {

namespace detail {

std::vector<Rhythm> reduce_to_classes(const std::vector<Rhythm>& complements, bool aperiodic_only) {
  std::set<Rhythm> classes;
  for (const Rhythm& b : complements) {
    if (aperiodic_only && smallest_period(b)) continue;
    classes.insert(canonicalize(b));
  }
  return {classes.begin(), classes.end()};
}

}  // namespace detail

namespace {

class ExactCover {
 public:
  ExactCover(const Rhythm& a, detail::SearchBudget& budget)
      : a_(a), n_(a.modulus()), masks_(detail::translate_masks(a)), covered_(n_), budget_(budget) {}

  std::vector<Rhythm> run() {
    search(0);
    return std::move(found_);
  }

 private:
  void search(int from) {
    if (!budget_.tick()) return;
    int s = from;
    while (s < n_ && covered_.test(s)) ++s;
    if (s == n_) {
      found_.emplace_back(n_, offsets_);
      return;
    }
    for (int e : a_.elements()) {
      const int b = ((s - e) % n_ + n_) % n_;
      const auto& mask = masks_[static_cast<std::size_t>(b)];
      if (!covered_.disjoint(mask)) continue;
      covered_.merge(mask);
      offsets_.push_back(b);
      search(s + 1);
      offsets_.pop_back();
      covered_.remove(mask);
      if (budget_.expired()) return;
    }
  }

  const Rhythm& a_;
  int n_;
  std::vector<detail::Cover> masks_;
  detail::Cover covered_;
  detail::SearchBudget& budget_;
  std::vector<int> offsets_;
  std::vector<Rhythm> found_;
};

}  // namespace

std::vector<Rhythm> all_complements(const Rhythm& a, std::uint64_t node_limit) {
  if (a.is_empty()) throw RhythmError("all_complements: empty rhythm");
  if (a.modulus() % static_cast<int>(a.size()) != 0) return {};
  detail::SearchBudget budget(node_limit, std::nullopt);
  return ExactCover(a, budget).run();
}

EnumerationReport enumerate_oracle(const Rhythm& a, const EnumerationOptions& options) {
  const auto start = sat::Clock::now();
  if (a.is_empty()) throw RhythmError("enumerate_oracle: empty rhythm");
  EnumerationReport report;
  report.method = Method::oracle;
  report.n = a.modulus();
  report.rhythm = canonicalize(a);
  report.aperiodic = options.aperiodic;
  if (report.n % static_cast<int>(a.size()) == 0) {
    std::optional<sat::Clock::time_point> deadline;
    if (options.time_limit) deadline = start + *options.time_limit;
    detail::SearchBudget budget(options.node_limit, deadline);
    const auto complements = ExactCover(report.rhythm, budget).run();
    report.raw_solution_count = complements.size();
    report.classes = detail::reduce_to_classes(complements, options.aperiodic);
    report.solver_calls = budget.nodes();
    report.complete = !budget.expired();
  }
  report.elapsed = sat::Clock::now() - start;
  return report;
}

}  // namespace canon
