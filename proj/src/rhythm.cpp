#include "canon/rhythm.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace canon {

namespace {

int reduce(long long value, int modulus) {
  long long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

void require_non_empty(const Rhythm& a, const char* what) {
  if (a.is_empty()) throw RhythmError(std::string(what) + ": empty rhythm");
}

void require_same_modulus(const Rhythm& a, const Rhythm& b, const char* what) {
  if (a.modulus() != b.modulus()) {
    throw RhythmError(std::string(what) + ": modulus mismatch (" + std::to_string(a.modulus()) +
                      " vs " + std::to_string(b.modulus()) + ")");
  }
}

bool shift_fixes(const Rhythm& a, int shift) {
  const int n = a.modulus();
  for (int e : a.elements()) {
    if (!a.contains((e + shift) % n)) return false;
  }
  return true;
}

}  // namespace

Rhythm::Rhythm(int modulus, std::vector<int> elements) : modulus_(modulus), elements_(std::move(elements)) {
  if (modulus_ < 1) throw RhythmError("modulus must be positive, got " + std::to_string(modulus_));
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const int e = elements_[i];
    if (e < 0 || e >= modulus_) {
      throw RhythmError("element " + std::to_string(e) + " outside [0, " + std::to_string(modulus_ - 1) + "]");
    }
    if (i > 0 && elements_[i - 1] == e) throw RhythmError("duplicate element " + std::to_string(e));
  }
}

Rhythm Rhythm::empty(int modulus) { return Rhythm(modulus, {}); }

Rhythm Rhythm::from_indicator(std::span<const bool> indicator) {
  std::vector<int> elements;
  for (std::size_t i = 0; i < indicator.size(); ++i) {
    if (indicator[i]) elements.push_back(static_cast<int>(i));
  }
  return Rhythm(static_cast<int>(indicator.size()), std::move(elements));
}

bool Rhythm::contains(int value) const { return std::binary_search(elements_.begin(), elements_.end(), value); }

std::vector<bool> Rhythm::indicator() const {
  std::vector<bool> out(static_cast<std::size_t>(modulus_), false);
  for (int e : elements_) out[static_cast<std::size_t>(e)] = true;
  return out;
}

std::string Rhythm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out;
}

std::vector<std::pair<int, int>> prime_factorization(int n) {
  if (n < 1) throw RhythmError("cannot factor non-positive " + std::to_string(n));
  std::vector<std::pair<int, int>> factors;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    int alpha = 0;
    while (n % p == 0) {
      n /= p;
      ++alpha;
    }
    if (alpha) factors.emplace_back(p, alpha);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

DivisorSet maximal_divisors(int n) {
  if (n < 2) throw RhythmError("maximal divisors need n >= 2, got " + std::to_string(n));
  DivisorSet set;
  set.modulus = n;
  set.prime_factorization = prime_factorization(n);
  for (auto [p, alpha] : set.prime_factorization) set.maximal_divisors.push_back(n / p);
  std::sort(set.maximal_divisors.begin(), set.maximal_divisors.end());
  return set;
}

Rhythm translate(const Rhythm& a, long long t) {
  const int n = a.modulus();
  const int shift = reduce(t, n);
  std::vector<int> out;
  out.reserve(a.size());
  for (int e : a.elements()) out.push_back((e + shift) % n);
  return Rhythm(n, std::move(out));
}

std::optional<int> smallest_period(const Rhythm& a) {
  require_non_empty(a, "smallest_period");
  for (int z = 1; z < a.modulus(); ++z) {
    if (shift_fixes(a, z)) return z;
  }
  return std::nullopt;
}

bool is_periodic_fast(const Rhythm& a, const DivisorSet& divisors) {
  require_non_empty(a, "is_periodic_fast");
  if (divisors.modulus != a.modulus()) throw RhythmError("is_periodic_fast: divisor set built for another modulus");
  return std::any_of(divisors.maximal_divisors.begin(), divisors.maximal_divisors.end(),
                     [&](int d) { return shift_fixes(a, d); });
}

bool is_periodic(const Rhythm& a) {
  require_non_empty(a, "is_periodic");
  if (a.modulus() < 2) return false;
  return is_periodic_fast(a, maximal_divisors(a.modulus()));
}

bool is_tiling(const Rhythm& a, const Rhythm& b) {
  require_same_modulus(a, b, "is_tiling");
  require_non_empty(a, "is_tiling");
  require_non_empty(b, "is_tiling");
  const int n = a.modulus();
  if (static_cast<long long>(a.size()) * static_cast<long long>(b.size()) != n) return false;
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int x : a.elements()) {
    for (int y : b.elements()) {
      const auto s = static_cast<std::size_t>((x + y) % n);
      if (hit[s]) return false;
      hit[s] = true;
    }
  }
  return true;
}

Polynomial01 characteristic_polynomial(const Rhythm& a) {
  Polynomial01 p;
  p.modulus = a.modulus();
  p.coefficients.assign(static_cast<std::size_t>(a.modulus()), 0);
  for (int e : a.elements()) p.coefficients[static_cast<std::size_t>(e)] = 1;
  return p;
}

std::vector<long long> cyclic_product(const Polynomial01& p, const Polynomial01& q) {
  if (p.modulus != q.modulus) throw RhythmError("cyclic_product: modulus mismatch");
  const auto n = static_cast<std::size_t>(p.modulus);
  std::vector<long long> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.coefficients[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      out[(i + j) % n] += static_cast<long long>(p.coefficients[i]) * q.coefficients[j];
    }
  }
  return out;
}

bool poly_tiling_check(const Rhythm& a, const Rhythm& b) {
  require_same_modulus(a, b, "poly_tiling_check");
  const auto product = cyclic_product(characteristic_polynomial(a), characteristic_polynomial(b));
  return std::all_of(product.begin(), product.end(), [](long long c) { return c == 1; });
}

Rhythm canonicalize(const Rhythm& a) {
  require_non_empty(a, "canonicalize");
  // The lex-min translate starts with 0, so only shifts bringing an element to 0 compete.
  std::optional<Rhythm> best;
  for (int e : a.elements()) {
    Rhythm candidate = translate(a, -static_cast<long long>(e));
    if (!best || candidate.elements() < best->elements()) best = std::move(candidate);
  }
  return *best;
}

Rhythm parse_rhythm(std::string_view text, int modulus) {
  std::vector<int> elements;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_space();
  if (pos == text.size()) return Rhythm(modulus, {});
  while (true) {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw RhythmError("cannot parse rhythm '" + std::string(text) + "'");
    pos = static_cast<std::size_t>(ptr - text.data());
    elements.push_back(value);
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw RhythmError("unexpected character in rhythm '" + std::string(text) + "'");
    ++pos;
  }
  return Rhythm(modulus, std::move(elements));
}

Rhythm parse_rhythm_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw RhythmError(std::string("invalid rhythm JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("elements") || !doc["n"].is_number_integer() ||
      !doc["elements"].is_array()) {
    throw RhythmError("rhythm JSON needs integer \"n\" and array \"elements\"");
  }
  std::vector<int> elements;
  for (const auto& e : doc["elements"]) {
    if (!e.is_number_integer()) throw RhythmError("rhythm JSON elements must be integers");
    elements.push_back(e.get<int>());
  }
  return Rhythm(doc["n"].get<int>(), std::move(elements));
}

std::string to_json(const Rhythm& a) {
  nlohmann::ordered_json doc;
  doc["n"] = a.modulus();
  doc["elements"] = a.elements();
  return doc.dump();
}

}  // namespace canon
