#include "qdicke/qcomb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qdicke {

namespace {

// Largest word list multiset_permutations will materialize.
constexpr long long kMaxWordCount = 10'000'000;

BigInt exact_multinomial_count(const Composition& k) {
  BigInt count = 1;
  int pos = 0;
  for (int i = 0; i < k.d(); ++i) {
    for (int j = 1; j <= k[i]; ++j) {
      ++pos;
      count = count * pos / j;  // prefix binomials keep this an exact integer
    }
  }
  return count;
}

}  // namespace

// ---------------------------------------------------------------------------
// DeformationParam

DeformationParam::DeformationParam(double magnitude_, double phase_)
    : magnitude(magnitude_), phase(phase_) {
  if (!(magnitude > 0.0) || !std::isfinite(magnitude) || !std::isfinite(phase))
    throw std::invalid_argument("DeformationParam: magnitude must be finite and > 0");
}

Cx DeformationParam::power(double x) const {
  double r = std::pow(magnitude, x);
  if (phase == 0.0) return Cx(r, 0.0);
  return std::polar(r, phase * x);
}

DeformationParam DeformationParam::inverse() const {
  return DeformationParam(1.0 / magnitude, -phase);
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(const BigInt& c) {
  LaurentPoly p;
  p.add_term(0, c);
  return p;
}

LaurentPoly LaurentPoly::half_power(int s_exp) {
  LaurentPoly p;
  p.add_term(s_exp, 1);
  return p;
}

BigInt LaurentPoly::coeff(int s_exp) const {
  auto it = terms_.find(s_exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int s_exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(s_exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  const int de = rhs.max_exp();
  const BigInt& dc = rhs.terms_.rbegin()->second;
  // An exact quotient cannot reach below this; without the floor a
  // non-divisor would unwind into an endless formal Laurent series.
  const int quot_floor = min_exp() - rhs.min_exp();
  LaurentPoly quotient;
  LaurentPoly rem = *this;
  while (!rem.is_zero() && rem.max_exp() - de >= quot_floor) {
    int qe = rem.max_exp() - de;
    BigInt rc = rem.terms_.rbegin()->second;
    BigInt qc = rc / dc;
    if (qc * dc != rc) throw std::domain_error("polynomial division leaves a remainder");
    quotient.add_term(qe, qc);
    for (const auto& [e, c] : rhs.terms_) rem.add_term(e + qe, -c * qc);
  }
  if (!rem.is_zero()) throw std::domain_error("polynomial division leaves a remainder");
  return quotient;
}

double LaurentPoly::evaluate(double q_mag) const {
  if (!(q_mag > 0.0)) throw std::invalid_argument("evaluate: q must be > 0");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c.convert_to<double>() * std::pow(q_mag, 0.5 * e);
  return sum;
}

bool LaurentPoly::is_palindromic() const {
  for (const auto& [e, c] : terms_)
    if (coeff(-e) != c) return false;
  return true;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string var;
    if (e != 0) {
      if (e % 2 == 0) {
        int x = e / 2;
        var = (x == 1) ? "q" : "q^" + std::to_string(x);
      } else {
        var = "q^(" + std::to_string(e) + "/2)";
      }
    }
    if (var.empty()) {
      out << mag.str();
    } else if (mag == 1) {
      out << var;
    } else {
      out << mag.str() << "*" << var;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Composition and Word

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Composition: needs at least one part");
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("Composition: parts must be non-negative");
    n_ += p;
  }
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters.size());
  for (int l : letters) {
    if (l < 0 || l > 9) throw std::invalid_argument("Word::str: letters must be single digits");
    out.push_back(static_cast<char>('0' + l));
  }
  return out;
}

Word Word::parse(const std::string& digits) {
  Word w;
  w.letters.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("Word::parse: expected digits only");
    w.letters.push_back(ch - '0');
  }
  return w;
}

// ---------------------------------------------------------------------------
// Brackets

double q_bracket(double x, double q_mag) {
  if (!(q_mag > 0.0)) throw std::invalid_argument("q_bracket: q must be > 0");
  if (q_mag == 1.0) return x;
  double L = std::log(q_mag);
  return std::sinh(x * L) / std::sinh(L);
}

double log_q_bracket(int x, double q_mag) {
  if (x < 1) throw std::invalid_argument("log_q_bracket: x must be >= 1");
  if (!(q_mag > 0.0)) throw std::invalid_argument("log_q_bracket: q must be > 0");
  double L = std::abs(std::log(q_mag));  // [x] is q -> 1/q invariant
  if (L == 0.0) return std::log(static_cast<double>(x));
  // sinh(xL)/sinh(L) written to survive xL >> 1 and L -> 0.
  return (x - 1) * L + std::log(-std::expm1(-2.0 * x * L)) - std::log(-std::expm1(-2.0 * L));
}

LaurentPoly q_bracket_poly(int m) {
  if (m < 0) throw std::invalid_argument("q_bracket_poly: m must be >= 0");
  LaurentPoly p;
  for (int e = m - 1; e >= 1 - m; e -= 2) p.add_term(2 * e, 1);
  return p;
}

LaurentPoly q_factorial_poly(int m) {
  if (m < 0) throw std::invalid_argument("q_factorial_poly: m must be >= 0");
  LaurentPoly p = LaurentPoly::constant(1);
  for (int j = 2; j <= m; ++j) p = p * q_bracket_poly(j);
  return p;
}

std::vector<double> log_q_factorial_table(int m, double q_mag) {
  if (m < 0) throw std::invalid_argument("log_q_factorial_table: m must be >= 0");
  std::vector<double> table(static_cast<std::size_t>(m) + 1, 0.0);
  for (int j = 2; j <= m; ++j)
    table[static_cast<std::size_t>(j)] =
        table[static_cast<std::size_t>(j) - 1] + log_q_bracket(j, q_mag);
  return table;
}

LaurentPoly q_multinomial_poly(const Composition& k) {
  LaurentPoly p = q_factorial_poly(k.n());
  for (int i = 0; i < k.d(); ++i) p = p.div_exact(q_factorial_poly(k[i]));
  return p;
}

double q_multinomial_log(const Composition& k, double q_mag) {
  auto table = log_q_factorial_table(k.n(), q_mag);
  double sum = table[static_cast<std::size_t>(k.n())];
  for (int i = 0; i < k.d(); ++i) sum -= table[static_cast<std::size_t>(k[i])];
  return sum;
}

// ---------------------------------------------------------------------------
// Words of a given content

long long inversion_number(const Word& w) {
  long long inv = 0;
  std::map<int, long long> seen;  // letter -> multiplicity so far
  for (int letter : w.letters) {
    for (auto it = seen.upper_bound(letter); it != seen.end(); ++it) inv += it->second;
    ++seen[letter];
  }
  return inv;
}

long long max_inversion(const Composition& k) {
  long long j = 0;
  long long suffix = k.n();
  for (int i = 0; i < k.d(); ++i) {
    suffix -= k[i];
    j += static_cast<long long>(k[i]) * suffix;
  }
  return j;
}

std::vector<Word> multiset_permutations(const Composition& k) {
  BigInt count = exact_multinomial_count(k);
  if (count > kMaxWordCount)
    throw ResourceError("multiset_permutations: " + count.str() + " words exceed the limit");
  std::vector<Word> words;
  words.reserve(count.convert_to<std::size_t>());
  Word w = identity_word(k);
  do {
    words.push_back(w);
  } while (std::next_permutation(w.letters.begin(), w.letters.end()));
  return words;
}

Word identity_word(const Composition& k) {
  Word w;
  w.letters.reserve(static_cast<std::size_t>(k.n()));
  for (int i = 0; i < k.d(); ++i) w.letters.insert(w.letters.end(), static_cast<std::size_t>(k[i]), i);
  return w;
}

Composition reverse_composition(const Composition& k) {
  std::vector<int> parts(k.parts().rbegin(), k.parts().rend());
  return Composition(std::move(parts));
}

bool verify_inversion_identity(const Composition& k) {
  const long long j = max_inversion(k);
  LaurentPoly sum;
  for (const Word& w : multiset_permutations(k)) {
    long long e = 2 * (j - 2 * inversion_number(w));  // s-exponent of q^(J - 2 inv)
    sum.add_term(static_cast<int>(e), 1);
  }
  return sum == q_multinomial_poly(k);
}

std::vector<Composition> weak_compositions(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("weak_compositions: need n >= 0 and d >= 1");
  std::vector<Composition> out;
  std::vector<int> parts(static_cast<std::size_t>(d), 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == d - 1) {
      parts[static_cast<std::size_t>(pos)] = rest;
      out.push_back(Composition(parts));
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      parts[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace qdicke
