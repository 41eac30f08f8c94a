// canon: enumerate aperiodic tiling complements of rhythms in Z_n.
//
//   canon vuza --n 72 --p1 2 --n1 2 --p2 3 --n2 3 --n3 2
//   canon enumerate --n 9 --rhythm 0,1,5 --method all
//   canon encode --n 72 --p1 2 --n1 2 --p2 3 --n2 3 --n3 2 --format lp --out model.lp
//   canon check --n 9 --rhythm 0,1,5 --complement 0,3,6
//   canon table data/vuza_small.csv --jobs 4
//   canon solve formula.cnf
//
// Exit codes: 0 success, 1 bad input, 2 incomplete (time limit), 3 disagreement or count mismatch.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "canon/dimacs.hpp"
#include "canon/encoder.hpp"
#include "canon/enumerate.hpp"
#include "canon/lp_writer.hpp"
#include "canon/report.hpp"
#include "canon/rhythm.hpp"
#include "canon/sat/cdcl_solver.hpp"
#include "canon/vuza.hpp"

namespace {

using namespace canon;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitMismatch = 3;

struct RunConfig {
  int n = 0;
  std::string rhythm;
  std::string rhythm_file;
  std::string complement;
  VuzaParams vuza;
  bool aperiodic = true;
  std::string method = "sat";
  std::string format;
  std::string out;
  double time_limit_s = 600.0;
  std::uint64_t seed = sat::kDefaultSeed;
  int jobs = 1;
  bool extended = false;
  bool timing = true;
  std::string engine = "cdcl";
  std::string external_solver;
  std::string instances;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool any_vuza_flag(const RunConfig& cfg) {
  const auto& v = cfg.vuza;
  return v.p1 || v.n1 || v.p2 || v.n2 || v.n3;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Exactly one rhythm source must be given.
Rhythm resolve_rhythm(const RunConfig& cfg) {
  const int sources = (!cfg.rhythm.empty() ? 1 : 0) + (!cfg.rhythm_file.empty() ? 1 : 0) + (any_vuza_flag(cfg) ? 1 : 0);
  if (sources != 1) throw InputError("give exactly one of --rhythm, --rhythm-file or the Vuza parameters");
  if (any_vuza_flag(cfg)) {
    if (auto why = vuza_violation(cfg.vuza, cfg.n)) throw InputError("invalid Vuza parameters: " + *why);
    return construct_inner(cfg.vuza, cfg.n);
  }
  if (!cfg.rhythm_file.empty()) {
    const std::string text = read_file(cfg.rhythm_file);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      Rhythm a = parse_rhythm_json(text);
      if (cfg.n && cfg.n != a.modulus()) throw InputError("--n disagrees with the modulus in " + cfg.rhythm_file);
      return a;
    }
    if (cfg.n < 1) throw InputError("--n is required with a text rhythm file");
    auto line = text.substr(0, text.find('\n'));
    return parse_rhythm(line, cfg.n);
  }
  if (cfg.n < 1) throw InputError("--n is required");
  return parse_rhythm(cfg.rhythm, cfg.n);
}

EnumerationOptions enumeration_options(const RunConfig& cfg) {
  EnumerationOptions opts;
  opts.aperiodic = cfg.aperiodic;
  opts.engine_options.seed = cfg.seed;
  opts.time_limit = std::chrono::milliseconds(static_cast<long long>(cfg.time_limit_s * 1000.0));
  if (cfg.engine == "cdcl") {
    opts.engine = sat::EngineKind::cdcl;
  } else if (cfg.engine == "backtracking") {
    opts.engine = sat::EngineKind::backtracking;
  } else if (cfg.engine == "external") {
    if (cfg.external_solver.empty()) throw InputError("--engine external needs --external-solver");
    opts.engine = sat::EngineKind::external;
    opts.engine_options.external_command = cfg.external_solver;
  } else {
    throw InputError("unknown engine '" + cfg.engine + "'");
  }
  return opts;
}

// Writes to --out when given, else stdout.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw InputError("cannot write " + cfg.out);
  file << text;
}

int cmd_vuza(const RunConfig& cfg) {
  if (auto why = vuza_violation(cfg.vuza, cfg.n)) {
    std::cerr << "invalid Vuza parameters " << cfg.vuza.to_string() << " for n = " << cfg.n << ": " << *why << '\n';
    return kExitInput;
  }
  const Rhythm a = construct_inner(cfg.vuza, cfg.n);
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = cfg.n;
    doc["params"] = {{"p1", cfg.vuza.p1}, {"n1", cfg.vuza.n1}, {"p2", cfg.vuza.p2}, {"n2", cfg.vuza.n2}, {"n3", cfg.vuza.n3}};
    doc["A"] = a.elements();
    doc["canonical"] = canonicalize(a).elements();
    doc["size"] = a.size();
    emit(cfg, doc.dump() + "\n");
  } else {
    emit(cfg, a.to_string() + "\n|A| = " + std::to_string(a.size()) + "\n");
  }
  return kExitOk;
}

std::string render(const EnumerationReport& report, const std::string& format, ReportFormat rf) {
  if (format == "csv") return report_csv_header() + "\n" + report_to_csv_row(report, rf) + "\n";
  if (format == "text") return report_to_text(report, rf);
  return report_to_json(report, rf) + "\n";
}

int cmd_enumerate(const RunConfig& cfg) {
  const Rhythm a = resolve_rhythm(cfg);
  const auto opts = enumeration_options(cfg);
  const ReportFormat rf{cfg.timing};
  const std::string format = cfg.format.empty() ? "json" : cfg.format;

  if (cfg.method == "all") {
    const CrossValidation cv = cross_validate(a, opts);
    const bool complete = cv.sat.complete && cv.oracle.complete && cv.fill_out.complete;
    std::string text;
    if (format == "json") {
      nlohmann::ordered_json doc;
      doc["agreement"] = cv.agree;
      doc["class_count"] = cv.sat.class_count();
      doc["reports"] = nlohmann::ordered_json::array();
      for (const auto* r : {&cv.sat, &cv.oracle, &cv.fill_out}) {
        doc["reports"].push_back(nlohmann::ordered_json::parse(report_to_json(*r, rf)));
      }
      text = doc.dump() + "\n";
    } else if (format == "csv") {
      text = report_csv_header() + "\n";
      for (const auto* r : {&cv.sat, &cv.oracle, &cv.fill_out}) text += report_to_csv_row(*r, rf) + "\n";
    } else {
      for (const auto* r : {&cv.sat, &cv.oracle, &cv.fill_out}) text += report_to_text(*r, rf);
      text += std::string("agreement: ") + (cv.agree ? "true" : "false") + "\n";
    }
    emit(cfg, text);
    if (!complete) return kExitIncomplete;
    return cv.agree ? kExitOk : kExitMismatch;
  }

  const auto method = parse_method(cfg.method);
  if (!method) throw InputError("unknown method '" + cfg.method + "' (sat|oracle|fillout|all)");
  const EnumerationReport report = enumerate(*method, a, opts);
  emit(cfg, render(report, format, rf));
  if (!report.complete) {
    std::cerr << "incomplete: time limit reached after " << report.class_count() << " classes\n";
    return kExitIncomplete;
  }
  return kExitOk;
}

int cmd_encode(const RunConfig& cfg) {
  const Rhythm a = resolve_rhythm(cfg);
  const std::string format = cfg.format.empty() ? "dimacs" : cfg.format;
  std::string body;
  std::string summary;
  if (format == "dimacs") {
    const CnfInstance inst = encode(a, cfg.aperiodic);
    body = to_dimacs(inst);
    summary = std::to_string(inst.num_vars()) + " variables, " + std::to_string(inst.clauses.size()) + " clauses";
  } else if (format == "lp") {
    std::ostringstream out;
    const LpRowCounts counts = export_lp(a, out);
    body = out.str();
    summary = std::to_string(counts.total_rows()) + " rows (" + std::to_string(counts.tiling) + " tiling, " +
              std::to_string(counts.y_bands) + " y-bands, " + std::to_string(counts.z_bands) + " z-bands, " +
              std::to_string(counts.link) + " links, " + std::to_string(counts.aperiodic) + " aperiodicity), " +
              std::to_string(counts.binaries) + " binaries";
  } else {
    throw InputError("unknown encode format '" + format + "' (dimacs|lp)");
  }
  if (cfg.out.empty()) {
    std::cout << body;
    std::cerr << summary << '\n';
  } else {
    emit(cfg, body);
    std::cout << summary << '\n';
  }
  return kExitOk;
}

int cmd_check(const RunConfig& cfg) {
  if (cfg.n < 1) throw InputError("--n is required");
  if (cfg.rhythm.empty() || cfg.complement.empty()) throw InputError("check needs --rhythm and --complement");
  const Rhythm a = parse_rhythm(cfg.rhythm, cfg.n);
  const Rhythm b = parse_rhythm(cfg.complement, cfg.n);
  if (a.is_empty() || b.is_empty()) throw InputError("check needs non-empty rhythms");
  const bool direct = is_tiling(a, b);
  const bool poly = poly_tiling_check(a, b);
  const auto za = smallest_period(a);
  const auto zb = smallest_period(b);
  const bool vuza = direct && !za && !zb;

  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = cfg.n;
    doc["A"] = a.elements();
    doc["B"] = b.elements();
    doc["tiles"] = direct;
    doc["direct_sum"] = direct;
    doc["polynomial"] = poly;
    doc["A_period"] = za ? nlohmann::ordered_json(*za) : nlohmann::ordered_json(nullptr);
    doc["B_period"] = zb ? nlohmann::ordered_json(*zb) : nlohmann::ordered_json(nullptr);
    doc["vuza"] = vuza;
    emit(cfg, doc.dump() + "\n");
  } else {
    auto periodicity = [](const char* label, const std::optional<int>& z) {
      return std::string(label) + (z ? " periodic z=" + std::to_string(*z) : " aperiodic") + "\n";
    };
    std::string text = std::string("tiles=") + (direct ? "true" : "false") + " (direct sum " + (direct ? "yes" : "no") +
                       ", polynomial " + (poly ? "yes" : "no") + ")\n";
    text += periodicity("A", za);
    text += periodicity("B", zb);
    text += std::string("vuza=") + (vuza ? "true" : "false") + "\n";
    emit(cfg, text);
  }
  return direct == poly ? kExitOk : kExitMismatch;
}

struct TableRow {
  int n = 0;
  VuzaParams params;
  std::optional<long long> expected;
  bool extended = false;
  std::string parse_error;
};

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::vector<TableRow> read_instances(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> header;
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    auto cells = split_csv(line);
    if (header.empty()) {
      header = cells;
      for (const char* required : {"n", "p1", "n1", "p2", "n2", "n3"}) {
        if (std::find(header.begin(), header.end(), required) == header.end()) {
          throw InputError(std::string("instance CSV header lacks column '") + required + "'");
        }
      }
      continue;
    }
    TableRow row;
    auto field = [&](const std::string& name) -> std::string {
      auto it = std::find(header.begin(), header.end(), name);
      if (it == header.end()) return "";
      const auto k = static_cast<std::size_t>(it - header.begin());
      return k < cells.size() ? cells[k] : "";
    };
    try {
      row.n = std::stoi(field("n"));
      row.params = {std::stoi(field("p1")), std::stoi(field("n1")), std::stoi(field("p2")), std::stoi(field("n2")),
                    std::stoi(field("n3"))};
      if (const auto e = field("expected"); !e.empty()) row.expected = std::stoll(e);
    } catch (const std::exception&) {
      row.parse_error = "unparsable row: " + line;
    }
    row.extended = field("tier") == "extended";
    rows.push_back(row);
  }
  return rows;
}

struct TableResult {
  std::string status = "ok";
  std::size_t size_a = 0;
  EnumerationReport report;
};

TableResult run_row(const TableRow& row, Method method, const EnumerationOptions& opts, bool extended) {
  TableResult result;
  if (!row.parse_error.empty()) {
    result.status = "invalid-row";
    return result;
  }
  if (row.extended && !extended) {
    result.status = "skipped-extended";
    return result;
  }
  if (!validate(row.params, row.n)) {
    result.status = "invalid-params";
    return result;
  }
  try {
    const Rhythm a = construct_inner(row.params, row.n);
    result.size_a = a.size();
    result.report = enumerate(method, a, opts);
    if (!result.report.complete) result.status = "incomplete";
  } catch (const std::exception& e) {
    result.status = std::string("error: ") + e.what();
  }
  return result;
}

int cmd_table(const RunConfig& cfg) {
  if (cfg.instances.empty()) throw InputError("table needs an instance CSV file");
  const auto rows = read_instances(read_file(cfg.instances));
  const auto method = parse_method(cfg.method);
  if (!method) throw InputError("table supports --method sat|oracle|fillout");
  const auto opts = enumeration_options(cfg);

  std::vector<TableResult> results(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < rows.size(); k = next++) results[k] = run_row(rows[k], *method, opts, cfg.extended);
  };
  const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(rows.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::string text;
  int exit_code = kExitOk;
  if (!rows.empty()) {
    text += "n,p1,n1,p2,n2,n3,size_A,class_count,raw_solution_count,elapsed_ms,method,status,expected,match\n";
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    const auto& res = results[k];
    const bool ran = res.status == "ok" || res.status == "incomplete";
    std::ostringstream line;
    line << row.n << ',' << row.params.p1 << ',' << row.params.n1 << ',' << row.params.p2 << ',' << row.params.n2
         << ',' << row.params.n3 << ',';
    if (ran) {
      line << res.size_a << ',' << res.report.class_count() << ',' << res.report.raw_solution_count << ','
           << (cfg.timing ? elapsed_ms(res.report) : 0.0);
    } else {
      line << ",,,";
    }
    line << ',' << to_string(*method) << ',' << res.status << ',';
    if (row.expected) line << *row.expected;
    line << ',';
    if (row.expected && res.status == "ok") {
      const bool match = static_cast<long long>(res.report.class_count()) == *row.expected;
      line << (match ? "true" : "false");
      if (!match) exit_code = kExitMismatch;
    }
    if (res.status == "incomplete" && exit_code == kExitOk) exit_code = kExitIncomplete;
    text += line.str() + "\n";
  }
  emit(cfg, text);
  return exit_code;
}

int cmd_solve(const std::string& path, std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  const CnfFormula formula = read_dimacs(in);
  sat::CdclSolver solver(std::max(1, formula.num_vars), sat::CdclSolver::Options{.seed = seed});
  for (const auto& clause : formula.clauses) solver.add_clause(clause);
  const auto result = solver.solve();
  if (result.status == sat::Status::unsat) {
    std::cout << "s UNSATISFIABLE\n";
    return 20;
  }
  std::cout << "s SATISFIABLE\nv";
  for (int v = 1; v <= formula.num_vars; ++v) std::cout << ' ' << (result.value(v) ? v : -v);
  std::cout << " 0\n";
  return 10;
}

void add_rhythm_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "Modulus n of Z_n");
  sub->add_option("--rhythm", cfg.rhythm, "Rhythm A as comma-separated integers");
  sub->add_option("--rhythm-file", cfg.rhythm_file, "File holding A as text or as {\"n\":..,\"elements\":[..]}");
  sub->add_option("--p1", cfg.vuza.p1, "Vuza parameter p1");
  sub->add_option("--n1", cfg.vuza.n1, "Vuza parameter n1");
  sub->add_option("--p2", cfg.vuza.p2, "Vuza parameter p2");
  sub->add_option("--n2", cfg.vuza.n2, "Vuza parameter n2");
  sub->add_option("--n3", cfg.vuza.n3, "Vuza parameter n3");
}

void add_run_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_flag("--aperiodic,!--no-aperiodic", cfg.aperiodic, "Keep only aperiodic complements (default on)");
  sub->add_option("--method", cfg.method, "sat | oracle | fillout | all");
  sub->add_option("--time-limit", cfg.time_limit_s, "Per-instance time limit in seconds")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "Solver seed (default from CANON_SEED, else built in)");
  sub->add_option("--engine", cfg.engine, "cdcl | backtracking | external");
  sub->add_option("--external-solver", cfg.external_solver, "DIMACS solver command for --engine external");
  sub->add_flag("--timing,!--no-timing", cfg.timing, "Report wall-clock times (off gives byte-stable output)");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("CANON_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed CANON_SEED='" << env << "'\n";
    }
  }

  CLI::App app{"Aperiodic tiling complements of rhythms in Z_n"};
  app.require_subcommand(1);

  auto* vuza = app.add_subcommand("vuza", "Construct the Vuza inner rhythm A");
  vuza->add_option("--n", cfg.n, "Modulus n")->required();
  vuza->add_option("--p1", cfg.vuza.p1)->required();
  vuza->add_option("--n1", cfg.vuza.n1)->required();
  vuza->add_option("--p2", cfg.vuza.p2)->required();
  vuza->add_option("--n2", cfg.vuza.n2)->required();
  vuza->add_option("--n3", cfg.vuza.n3)->required();
  vuza->add_option("--format", cfg.format, "text | json");
  vuza->add_option("--out", cfg.out);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate complement classes of A");
  add_rhythm_flags(enumerate_cmd, cfg);
  add_run_flags(enumerate_cmd, cfg);
  enumerate_cmd->add_option("--format", cfg.format, "json | csv | text");
  enumerate_cmd->add_option("--out", cfg.out);

  auto* encode_cmd = app.add_subcommand("encode", "Write the CNF (DIMACS) or ILP (LP) model");
  add_rhythm_flags(encode_cmd, cfg);
  encode_cmd->add_flag("--aperiodic,!--no-aperiodic", cfg.aperiodic, "Include aperiodicity clauses (default on)");
  encode_cmd->add_option("--format", cfg.format, "dimacs | lp");
  encode_cmd->add_option("--out", cfg.out);

  auto* check = app.add_subcommand("check", "Check whether A and B form a (Vuza) canon");
  check->add_option("--n", cfg.n, "Modulus n")->required();
  check->add_option("--rhythm", cfg.rhythm, "Inner rhythm A")->required();
  check->add_option("--complement", cfg.complement, "Outer rhythm B")->required();
  check->add_option("--format", cfg.format, "text | json");
  check->add_option("--out", cfg.out);

  auto* table = app.add_subcommand("table", "Enumerate every row of an instance CSV (n,p1,n1,p2,n2,n3[,expected][,tier])");
  table->add_option("instances", cfg.instances, "Instance CSV")->required();
  add_run_flags(table, cfg);
  table->add_option("--jobs", cfg.jobs, "Rows solved concurrently")->check(CLI::PositiveNumber);
  table->add_flag("--extended", cfg.extended, "Also run rows marked tier=extended");
  table->add_option("--out", cfg.out);

  std::string cnf_path;
  auto* solve = app.add_subcommand("solve", "Solve a DIMACS file (prints s/v lines, exit 10/20)");
  solve->add_option("file", cnf_path)->required();
  solve->add_option("--seed", cfg.seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*vuza) return cmd_vuza(cfg);
    if (*enumerate_cmd) return cmd_enumerate(cfg);
    if (*encode_cmd) return cmd_encode(cfg);
    if (*check) return cmd_check(cfg);
    if (*table) return cmd_table(cfg);
    if (*solve) return cmd_solve(cnf_path, cfg.seed);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const RhythmError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DimacsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
