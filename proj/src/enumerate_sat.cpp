#include <algorithm>
#include <set>
#include <stdexcept>

#include "canon/encoder.hpp"
#include "canon/enumerate.hpp"

namespace canon {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::sat:
      return "SAT";
    case Method::oracle:
      return "ORACLE";
    case Method::fill_out:
      return "FILL_OUT";
  }
  return "SAT";
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "sat" || text == "SAT") return Method::sat;
  if (text == "oracle" || text == "ORACLE") return Method::oracle;
  if (text == "fillout" || text == "fill_out" || text == "FILL_OUT") return Method::fill_out;
  return std::nullopt;
}

EnumerationReport enumerate_sat(const Rhythm& input, const EnumerationOptions& options) {
  const auto start = sat::Clock::now();
  EnumerationReport report;
  report.method = Method::sat;
  report.n = input.modulus();
  report.aperiodic = options.aperiodic;
  if (input.is_empty()) throw RhythmError("enumerate_sat: empty rhythm");
  report.rhythm = canonicalize(input);
  const int n = report.n;
  if (n % static_cast<int>(report.rhythm.size()) != 0) {
    report.elapsed = sat::Clock::now() - start;
    return report;
  }

  const CnfInstance inst = encode(report.rhythm, options.aperiodic);
  auto store = sat::new_store(inst.num_vars(), options.engine, options.engine_options);
  for (const auto& clause : inst.clauses) store->add_clause(clause);

  sat::SolveLimits limits;
  if (options.time_limit) limits.deadline = start + *options.time_limit;

  std::set<Rhythm> classes;
  while (true) {
    const sat::SolveResult result = store->solve(limits);
    if (result.status == sat::Status::unsat) break;
    if (result.status == sat::Status::unknown) {
      report.complete = false;
      break;
    }

    const Rhythm b = decode_complement(inst.var_map, result.model);
    if (b.is_empty() || !is_tiling(report.rhythm, b)) {
      throw std::logic_error("decoded model {" + b.to_string() + "} does not tile with A = {" +
                             report.rhythm.to_string() + "}");
    }
    if (options.aperiodic && is_periodic(b)) {
      throw std::logic_error("decoded model {" + b.to_string() + "} is periodic despite aperiodicity clauses");
    }
    const Rhythm representative = canonicalize(b);
    if (!classes.insert(representative).second) {
      throw std::logic_error("translation class {" + representative.to_string() + "} found twice");
    }

    std::set<Rhythm> orbit;
    for (int t = 0; t < n; ++t) orbit.insert(translate(b, t));
    report.raw_solution_count += orbit.size();
    for (const Rhythm& shifted : orbit) {
      std::vector<int> blocking;
      blocking.reserve(shifted.size());
      for (int i : shifted.elements()) blocking.push_back(-inst.var_map.x(i));
      store->add_clause(blocking);
    }
  }

  report.classes.assign(classes.begin(), classes.end());
  report.solver_calls = store->solve_calls();
  report.elapsed = sat::Clock::now() - start;
  return report;
}

EnumerationReport enumerate(Method method, const Rhythm& a, const EnumerationOptions& options) {
  switch (method) {
    case Method::sat:
      return enumerate_sat(a, options);
    case Method::oracle:
      return enumerate_oracle(a, options);
    case Method::fill_out:
      return enumerate_fill_out(a, options);
  }
  throw std::invalid_argument("unknown enumeration method");
}

CrossValidation cross_validate(const Rhythm& a, const EnumerationOptions& options) {
  CrossValidation cv;
  cv.sat = enumerate_sat(a, options);
  cv.oracle = enumerate_oracle(a, options);
  cv.fill_out = enumerate_fill_out(a, options);
  cv.agree = cv.sat.complete && cv.oracle.complete && cv.fill_out.complete && cv.sat.classes == cv.oracle.classes &&
             cv.oracle.classes == cv.fill_out.classes;
  return cv;
}

}  // namespace canon
