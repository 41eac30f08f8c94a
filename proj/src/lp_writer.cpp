#include "canon/lp_writer.hpp"

#include <ostream>
#include <sstream>
#include <vector>

#include "canon/encoder.hpp"

namespace canon {

namespace {

struct Term {
  long long coef;
  std::string var;
};

std::string x_name(int i) { return "x_" + std::to_string(i); }
std::string aux_name(char kind, int d, int i) {
  return std::string(1, kind) + '_' + std::to_string(d) + '_' + std::to_string(i);
}

// LP readers cap line length, so long rows continue on indented lines.
void write_row(std::ostream& out, const std::string& name, const std::vector<Term>& terms, const char* sense,
               long long rhs) {
  constexpr std::size_t kTermsPerLine = 8;
  out << ' ' << name << ':';
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k > 0 && k % kTermsPerLine == 0) out << "\n   ";
    const auto& t = terms[k];
    if (t.coef < 0) {
      out << " -";
    } else if (k > 0) {
      out << " +";
    }
    const long long mag = t.coef < 0 ? -t.coef : t.coef;
    out << ' ';
    if (mag != 1) out << mag << ' ';
    out << t.var;
  }
  out << ' ' << sense << ' ' << rhs << '\n';
}

}  // namespace

LpRowCounts export_lp(const Rhythm& input, std::ostream& out) {
  if (input.is_empty()) throw RhythmError("export_lp: empty rhythm");
  const Rhythm a = canonicalize(input);
  const int n = a.modulus();
  const CirculantSpec circulant = CirculantSpec::of(a);
  DivisorSet divisors;
  if (n >= 2) divisors = maximal_divisors(n);

  LpRowCounts counts;
  out << "\\ Aperiodic tiling complements of A = {" << a.to_string() << "} in Z_" << n << '\n';
  out << "Minimize\n obj: 0 " << x_name(0) << "\nSubject To\n";

  for (int j = 0; j < n; ++j) {
    std::vector<Term> terms;
    for (int i = 0; i < n; ++i) {
      if (circulant.entry(j, i)) terms.push_back({1, x_name(i)});
    }
    write_row(out, "t_" + std::to_string(j), terms, "=", 1);
    ++counts.tiling;
  }

  for (int d : divisors.maximal_divisors) {
    const int m = n / d;
    for (int i = 0; i < d; ++i) {
      std::vector<Term> chain;
      for (int k = 0; k < m; ++k) chain.push_back({1, x_name(i + k * d)});

      // 0 <= sum x - m y <= m - 1
      auto y_terms = chain;
      y_terms.push_back({-m, aux_name('y', d, i)});
      const std::string yb = "yb_" + std::to_string(d) + '_' + std::to_string(i);
      write_row(out, yb + "_lo", y_terms, ">=", 0);
      write_row(out, yb + "_hi", y_terms, "<=", m - 1);
      ++counts.y_bands;

      // 0 <= sum (1 - x) - m z <= m - 1, i.e. 1 <= sum x + m z <= m
      auto z_terms = chain;
      z_terms.push_back({m, aux_name('z', d, i)});
      const std::string zb = "zb_" + std::to_string(d) + '_' + std::to_string(i);
      write_row(out, zb + "_lo", z_terms, ">=", 1);
      write_row(out, zb + "_hi", z_terms, "<=", m);
      ++counts.z_bands;

      write_row(out, aux_name('u', d, i),
                {{1, aux_name('y', d, i)}, {1, aux_name('z', d, i)}, {-1, aux_name('u', d, i)}}, "=", 0);
      ++counts.link;
    }
    std::vector<Term> us;
    for (int i = 0; i < d; ++i) us.push_back({1, aux_name('u', d, i)});
    write_row(out, "ap_" + std::to_string(d), us, "<=", d - 1);
    ++counts.aperiodic;
  }

  out << "Binary\n";
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(x_name(i));
  for (int d : divisors.maximal_divisors) {
    for (int i = 0; i < d; ++i) {
      names.push_back(aux_name('y', d, i));
      names.push_back(aux_name('z', d, i));
      names.push_back(aux_name('u', d, i));
    }
  }
  for (std::size_t k = 0; k < names.size(); ++k) {
    out << ' ' << names[k];
    if (k % 10 == 9 || k + 1 == names.size()) out << '\n';
  }
  counts.binaries = static_cast<int>(names.size());
  out << "End\n";
  return counts;
}

std::string to_lp(const Rhythm& a) {
  std::ostringstream out;
  export_lp(a, out);
  return out.str();
}

}  // namespace canon
