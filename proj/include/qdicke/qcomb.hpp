#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qdicke/common.hpp"

namespace qdicke {

using BigInt = boost::multiprecision::cpp_int;

// Deformation parameter Q = q * exp(i*alpha) with magnitude q > 0.  Fractional
// powers Q^x are taken on the fixed branch q^x * exp(i*alpha*x), so
// Q^x * (1/Q)^x = 1 for every half-integer x.  Brackets [x] always use the
// magnitude alone.
struct DeformationParam {
  double magnitude = 1.0;
  double phase = 0.0;

  DeformationParam() = default;
  explicit DeformationParam(double magnitude_, double phase_ = 0.0);

  Cx power(double x) const;            // Q^x on the fixed branch
  DeformationParam inverse() const;    // (1/q, -alpha)
  bool is_real() const { return phase == 0.0; }
};

// Laurent polynomial in s = q^(1/2) with exact integer coefficients.  A term
// with key e is the monomial q^(e/2); the zero polynomial stores no terms.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly half_power(int s_exp);  // q^(s_exp/2)

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, BigInt>& terms() const { return terms_; }
  BigInt coeff(int s_exp) const;
  int min_exp() const;  // requires a nonzero polynomial
  int max_exp() const;

  void add_term(int s_exp, const BigInt& c);

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  bool operator==(const LaurentPoly& rhs) const = default;

  // Exact division; throws std::domain_error if rhs is zero or leaves a
  // remainder.
  LaurentPoly div_exact(const LaurentPoly& rhs) const;

  // Value at real q > 0.
  double evaluate(double q_mag) const;

  // True iff invariant under q -> 1/q.
  bool is_palindromic() const;

  // Canonical text form in powers of q, highest exponent first:
  // "q^5 + 2*q^3 + 3*q + 3*q^-1 + 2*q^-3 + q^-5".  Half-integer exponents
  // render as "q^(5/2)"; the zero polynomial renders as "0".
  std::string str() const;

 private:
  std::map<int, BigInt> terms_;
};

// Content vector (k_0, ..., k_{d-1}) of words over {0, ..., d-1}: part i
// counts the letters equal to i.  Parts are non-negative and d >= 1.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  int d() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }
  auto operator<=>(const Composition& rhs) const { return parts_ <=> rhs.parts_; }
  bool operator==(const Composition& rhs) const { return parts_ == rhs.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Word over {0, ..., d-1}, one letter per entry.
struct Word {
  std::vector<int> letters;

  int size() const { return static_cast<int>(letters.size()); }
  auto operator<=>(const Word&) const = default;

  std::string str() const;                        // digits concatenated; letters must be 0..9
  static Word parse(const std::string& digits);   // inverse of str()
};

// Symmetric bracket [x] = (q^x - q^-x) / (q - q^-1), continued to [x] = x at
// q = 1.  Odd in x and invariant under q -> 1/q.
double q_bracket(double x, double q_mag);

// log [x] for integer x >= 1; stable for q near 1 and for large x where the
// bracket itself would overflow.
double log_q_bracket(int x, double q_mag);

// [m] as a polynomial: q^(m-1) + q^(m-3) + ... + q^(1-m); [0] is zero.
LaurentPoly q_bracket_poly(int m);

// [m]! = [m][m-1]...[1]; [0]! = 1.
LaurentPoly q_factorial_poly(int m);

// Table of log [j]! for j = 0..m at real q.
std::vector<double> log_q_factorial_table(int m, double q_mag);

// Gaussian multinomial [n]! / ([k_0]! ... [k_{d-1}]!), exact.
LaurentPoly q_multinomial_poly(const Composition& k);

// log of the multinomial at real q > 0.
double q_multinomial_log(const Composition& k, double q_mag);

// inv(w) = number of pairs i < j with w_i > w_j.
long long inversion_number(const Word& w);

// Maximum of inv over words of content k: sum_{i<j} k_i k_j.
long long max_inversion(const Composition& k);

// All distinct rearrangements of content k, ascending lexicographic.
std::vector<Word> multiset_permutations(const Composition& k);

// The sorted word 0^(k_0) 1^(k_1) ... , the unique word of content k with
// inv = 0.
Word identity_word(const Composition& k);

// Parts read back to front: (k_{d-1}, ..., k_0).
Composition reverse_composition(const Composition& k);

// Checks the exact polynomial identity
//   sum over words w of content k of q^(J(k) - 2 inv(w))  ==  [n; k],
// where J(k) = max_inversion(k).
bool verify_inversion_identity(const Composition& k);

// All weak compositions of n into d parts, ascending lexicographic.
std::vector<Composition> weak_compositions(int n, int d);

}  // namespace qdicke
