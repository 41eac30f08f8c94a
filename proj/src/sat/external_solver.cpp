#include "canon/sat/external_solver.hpp"

#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "canon/dimacs.hpp"

namespace canon::sat {

namespace {

// Removes the file when leaving scope.
class TempFile {
 public:
  TempFile() {
    auto pattern = (std::filesystem::temp_directory_path() / "canon-XXXXXX.cnf").string();
    const int fd = ::mkstemps(pattern.data(), 4);
    if (fd < 0) throw std::runtime_error("cannot create temporary DIMACS file");
    ::close(fd);
    path_ = pattern;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

}  // namespace

ExternalSolver::ExternalSolver(int num_vars, std::string command) : SatEngine(num_vars), command_(std::move(command)) {
  if (command_.empty()) throw std::invalid_argument("external solver command is empty");
}

SolveResult parse_solver_output(const std::string& output, int num_vars) {
  SolveResult result;
  std::istringstream in(output);
  std::string line;
  std::vector<bool> model(static_cast<std::size_t>(num_vars) + 1, false);
  while (std::getline(in, line)) {
    if (line.rfind("s ", 0) == 0) {
      if (line.find("UNSATISFIABLE") != std::string::npos) {
        result.status = Status::unsat;
      } else if (line.find("SATISFIABLE") != std::string::npos) {
        result.status = Status::sat;
      }
    } else if (line.rfind("v ", 0) == 0) {
      std::istringstream tokens(line.substr(2));
      long long lit = 0;
      while (tokens >> lit) {
        if (lit == 0) continue;
        const long long var = lit < 0 ? -lit : lit;
        if (var > num_vars) throw std::runtime_error("solver output names unknown variable " + std::to_string(var));
        model[static_cast<std::size_t>(var)] = lit > 0;
      }
    }
  }
  if (result.status == Status::sat) result.model = std::move(model);
  return result;
}

// The deadline is not forwarded; wrap the command in `timeout` if one is needed.
SolveResult ExternalSolver::run_solve(const SolveLimits&) {
  TempFile file;
  {
    std::ofstream out(file.path());
    write_dimacs(CnfFormula{num_vars(), clauses()}, out);
    if (!out) throw std::runtime_error("cannot write " + file.path());
  }
  const std::string cmd = command_ + ' ' + shell_quote(file.path());
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run external solver: " + command_);
  std::string output;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
  ::pclose(pipe);
  return parse_solver_output(output, num_vars());
}

}  // namespace canon::sat
