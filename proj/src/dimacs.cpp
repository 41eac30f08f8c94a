#include "canon/dimacs.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace canon {

namespace {

void write_clauses(const std::vector<Clause>& clauses, std::ostream& out) {
  for (const auto& clause : clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

struct Header {
  int num_vars = -1;
  long long num_clauses = -1;
};

// Parses clause lines after the header; `on_comment` sees comment lines before it.
template <typename OnComment>
CnfFormula parse(std::istream& in, OnComment&& on_comment) {
  CnfFormula formula;
  Header header;
  std::string line;
  Clause current;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == 'c') {
      if (header.num_vars < 0) on_comment(line);
      continue;
    }
    if (line[0] == '%') break;  // SATLIB trailer
    std::istringstream tokens(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (header.num_vars >= 0) throw DimacsError("duplicate header at line " + std::to_string(line_no));
      if (!(tokens >> p >> fmt >> header.num_vars >> header.num_clauses) || fmt != "cnf" || header.num_vars < 0 ||
          header.num_clauses < 0) {
        throw DimacsError("malformed header at line " + std::to_string(line_no));
      }
      formula.num_vars = header.num_vars;
      continue;
    }
    if (header.num_vars < 0) throw DimacsError("clause before header at line " + std::to_string(line_no));
    long long lit = 0;
    while (tokens >> lit) {
      if (lit == 0) {
        formula.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit > header.num_vars || -lit > header.num_vars) {
        throw DimacsError("literal " + std::to_string(lit) + " exceeds declared variables at line " +
                          std::to_string(line_no));
      }
      current.push_back(static_cast<int>(lit));
    }
    if (!tokens.eof()) throw DimacsError("unexpected token at line " + std::to_string(line_no));
  }
  if (header.num_vars < 0) throw DimacsError("missing 'p cnf' header");
  if (!current.empty()) throw DimacsError("last clause is not terminated by 0");
  if (static_cast<long long>(formula.clauses.size()) != header.num_clauses) {
    throw DimacsError("header declares " + std::to_string(header.num_clauses) + " clauses, found " +
                      std::to_string(formula.clauses.size()));
  }
  return formula;
}

}  // namespace

void export_dimacs(const CnfInstance& inst, std::ostream& out) {
  const auto& vm = inst.var_map;
  const int n = vm.modulus();
  out << "c tiling complements of A in Z_" << n << '\n';
  out << "c n " << n << '\n';
  out << "c rhythm " << inst.rhythm.to_string() << '\n';
  out << "c aperiodic " << (inst.aperiodic ? 1 : 0) << '\n';
  out << "c divisors";
  for (int d : vm.divisors()) out << ' ' << d;
  out << '\n';
  for (int i = 0; i < n; ++i) out << "c x " << i << " -> " << vm.x(i) << '\n';
  for (int d : vm.divisors()) {
    for (int i = 0; i < d; ++i) {
      out << "c y " << d << ' ' << i << " -> " << vm.y(d, i) << '\n';
      out << "c z " << d << ' ' << i << " -> " << vm.z(d, i) << '\n';
      out << "c u " << d << ' ' << i << " -> " << vm.u(d, i) << '\n';
    }
  }
  out << "p cnf " << vm.num_vars() << ' ' << inst.clauses.size() << '\n';
  write_clauses(inst.clauses, out);
}

std::string to_dimacs(const CnfInstance& inst) {
  std::ostringstream out;
  export_dimacs(inst, out);
  return out.str();
}

CnfInstance import_dimacs(std::istream& in) {
  int n = -1;
  int aperiodic = -1;
  std::string rhythm_text;
  bool have_rhythm = false;
  std::vector<int> divisors;
  bool have_divisors = false;
  std::vector<std::string> layout;

  auto on_comment = [&](const std::string& line) {
    std::istringstream tokens(line);
    std::string c, key;
    tokens >> c >> key;
    if (key == "n") {
      tokens >> n;
    } else if (key == "rhythm") {
      std::getline(tokens >> std::ws, rhythm_text);
      have_rhythm = true;
    } else if (key == "aperiodic") {
      tokens >> aperiodic;
    } else if (key == "divisors") {
      have_divisors = true;
      int d = 0;
      while (tokens >> d) divisors.push_back(d);
    } else if (key == "x" || key == "y" || key == "z" || key == "u") {
      layout.push_back(line);
    }
  };
  CnfFormula formula = parse(in, on_comment);
  if (n < 1 || aperiodic < 0 || !have_rhythm || !have_divisors) {
    throw DimacsError("DIMACS file lacks the instance metadata comments");
  }

  CnfInstance inst;
  inst.rhythm = parse_rhythm(rhythm_text, n);
  inst.aperiodic = aperiodic != 0;
  inst.var_map = VarMap(n, divisors);
  if (inst.var_map.num_vars() != formula.num_vars) {
    throw DimacsError("variable layout disagrees with header: expected " + std::to_string(inst.var_map.num_vars()) +
                      " variables");
  }
  // Every layout comment must match the layout rebuilt from n and the divisors.
  for (const auto& line : layout) {
    std::istringstream tokens(line);
    std::string c, kind, arrow;
    int id = 0;
    tokens >> c >> kind;
    int expected = 0;
    if (kind == "x") {
      int i = 0;
      tokens >> i >> arrow >> id;
      expected = inst.var_map.x(i);
    } else {
      int d = 0, i = 0;
      tokens >> d >> i >> arrow >> id;
      expected = kind == "y" ? inst.var_map.y(d, i) : kind == "z" ? inst.var_map.z(d, i) : inst.var_map.u(d, i);
    }
    if (arrow != "->" || id != expected) throw DimacsError("inconsistent layout comment: " + line);
  }
  inst.clauses = std::move(formula.clauses);
  return inst;
}

CnfFormula read_dimacs(std::istream& in) {
  return parse(in, [](const std::string&) {});
}

void write_dimacs(const CnfFormula& formula, std::ostream& out) {
  out << "p cnf " << formula.num_vars << ' ' << formula.clauses.size() << '\n';
  write_clauses(formula.clauses, out);
}

}  // namespace canon
