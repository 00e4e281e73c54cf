#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qdicke/qcomb.hpp"

using namespace qdicke;

namespace {

// Oracle 1: inversion number as BFS distance from the sorted word in the
// adjacent-transposition graph.  Every swap of unequal neighbours changes the
// inversion count by exactly one, so the two notions must agree.
std::map<std::vector<int>, long long> bfs_sort_distance(const Composition& k) {
  std::vector<int> start = identity_word(k).letters;
  std::map<std::vector<int>, long long> dist;
  std::deque<std::vector<int>> queue;
  dist[start] = 0;
  queue.push_back(start);
  while (!queue.empty()) {
    std::vector<int> w = queue.front();
    queue.pop_front();
    long long dw = dist[w];
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) continue;
      std::vector<int> v = w;
      std::swap(v[i], v[i + 1]);
      if (dist.emplace(v, dw + 1).second) queue.push_back(v);
    }
  }
  return dist;
}

// Oracle 2: Gaussian binomials from the Pascal-type recursion
//   B(m, j) = q^(m-j) B(m-1, j-1) + q^(-j) B(m-1, j)
// and multinomials as the telescoping product of prefix binomials.  Stored in
// s-exponents (s = q^(1/2)); long long coefficients are ample at these sizes.
using RawPoly = std::map<int, long long>;

RawPoly raw_shift_add(RawPoly acc, const RawPoly& p, int s_shift) {
  for (const auto& [e, c] : p) {
    acc[e + s_shift] += c;
    if (acc[e + s_shift] == 0) acc.erase(e + s_shift);
  }
  return acc;
}

RawPoly raw_mul(const RawPoly& a, const RawPoly& b) {
  RawPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      out[ea + eb] += ca * cb;
      if (out[ea + eb] == 0) out.erase(ea + eb);
    }
  return out;
}

RawPoly pascal_binomial(int m, int j) {
  if (j < 0 || j > m) return {};
  if (j == 0 || j == m) return {{0, 1}};
  RawPoly out = raw_shift_add({}, pascal_binomial(m - 1, j - 1), 2 * (m - j));
  return raw_shift_add(std::move(out), pascal_binomial(m - 1, j), -2 * j);
}

RawPoly pascal_multinomial(const Composition& k) {
  RawPoly out{{0, 1}};
  int prefix = 0;
  for (int i = 0; i < k.d(); ++i) {
    prefix += k[i];
    out = raw_mul(out, pascal_binomial(prefix, k[i]));
  }
  return out;
}

RawPoly to_raw(const LaurentPoly& p) {
  RawPoly out;
  for (const auto& [e, c] : p.terms()) out[e] = c.convert_to<long long>();
  return out;
}

std::vector<Composition> all_compositions_upto(int max_n, int max_d) {
  std::vector<Composition> out;
  for (int d = 1; d <= max_d; ++d)
    for (int n = 1; n <= max_n; ++n)
      for (const Composition& k : weak_compositions(n, d)) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("q_bracket basic values and symmetries") {
  CHECK(q_bracket(0, 2.0) == doctest::Approx(0.0));
  CHECK(q_bracket(1, 2.0) == doctest::Approx(1.0));
  CHECK(q_bracket(2, 2.0) == doctest::Approx(2.5));           // (4 - 1/4) / (2 - 1/2)
  CHECK(q_bracket(3, 2.0) == doctest::Approx(5.25));          // (8 - 1/8) / 1.5
  CHECK(q_bracket(5, 1.0) == doctest::Approx(5.0));
  for (double q : {0.37, 0.5, 1.07, 2.0, 3.5}) {
    for (int x = 0; x <= 9; ++x) {
      CHECK(q_bracket(x, q) == doctest::Approx(q_bracket(x, 1.0 / q)).epsilon(1e-12));
      CHECK(q_bracket(-x, q) == doctest::Approx(-q_bracket(x, q)).epsilon(1e-12));
    }
  }
  CHECK(q_bracket(0.5, 4.0) == doctest::Approx((2.0 - 0.5) / (4.0 - 0.25)));
  CHECK_THROWS_AS(q_bracket(1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(q_bracket(1, -2.0), std::invalid_argument);
}

TEST_CASE("log_q_bracket agrees with the direct bracket and survives extremes") {
  for (double q : {0.5, 1.0, 1.0000000001, 1.07, 2.0}) {
    for (int x = 1; x <= 40; ++x) {
      double direct = std::log(q_bracket(x, q));
      CHECK(log_q_bracket(x, q) == doctest::Approx(direct).epsilon(1e-12));
    }
  }
  // q^x overflows double here; the log stays finite and linear in x.
  double big = log_q_bracket(5000, 1.2);
  CHECK(std::isfinite(big));
  CHECK(big == doctest::Approx(4999 * std::log(1.2) - std::log(-std::expm1(-2 * std::log(1.2)))).epsilon(1e-12));
  CHECK_THROWS_AS(log_q_bracket(0, 2.0), std::invalid_argument);
}

TEST_CASE("q_bracket_poly and q_factorial_poly") {
  CHECK(q_bracket_poly(0).is_zero());
  CHECK(q_bracket_poly(1).str() == "1");
  CHECK(q_bracket_poly(2).str() == "q + q^-1");
  CHECK(q_bracket_poly(3).str() == "q^2 + 1 + q^-2");
  CHECK(q_factorial_poly(0).str() == "1");
  CHECK(q_factorial_poly(3).str() == "q^3 + 2*q + 2*q^-1 + q^-3");
  for (int m = 0; m <= 8; ++m) {
    CHECK(q_bracket_poly(m).evaluate(1.37) == doctest::Approx(q_bracket(m, 1.37)).epsilon(1e-12));
    CHECK(q_bracket_poly(m).is_palindromic());
    CHECK(q_factorial_poly(m).is_palindromic());
  }
}

TEST_CASE("LaurentPoly arithmetic, text form, and palindromes") {
  LaurentPoly zero;
  CHECK(zero.str() == "0");
  CHECK(zero.is_zero());
  CHECK((zero - q_bracket_poly(2)).str() == "-q - q^-1");

  LaurentPoly p;
  p.add_term(4, 1);
  p.add_term(2, -2);
  p.add_term(0, 3);
  CHECK(p.str() == "q^2 - 2*q + 3");

  CHECK(LaurentPoly::half_power(5).str() == "q^(5/2)");
  CHECK(LaurentPoly::half_power(-5).str() == "q^(-5/2)");
  CHECK((LaurentPoly::half_power(1) * LaurentPoly::half_power(1)).str() == "q");
  CHECK(LaurentPoly::half_power(-2).str() == "q^-1");

  LaurentPoly sum = q_bracket_poly(2) + q_bracket_poly(2);
  CHECK(sum.str() == "2*q + 2*q^-1");
  CHECK((sum - sum).is_zero());
  CHECK(sum.coeff(2) == 2);
  CHECK(sum.coeff(99) == 0);
  CHECK(sum.min_exp() == -2);
  CHECK(sum.max_exp() == 2);

  LaurentPoly asym = LaurentPoly::half_power(2) + LaurentPoly::constant(1);
  CHECK_FALSE(asym.is_palindromic());
  CHECK(q_bracket_poly(7).is_palindromic());
}

TEST_CASE("div_exact recovers factors and rejects non-divisors") {
  std::vector<LaurentPoly> pool = {
      q_bracket_poly(2), q_bracket_poly(3), q_factorial_poly(4),
      LaurentPoly::half_power(3) + LaurentPoly::constant(2),
      LaurentPoly::half_power(-4) - LaurentPoly::half_power(1)};
  for (const auto& a : pool)
    for (const auto& b : pool) CHECK((a * b).div_exact(b) == a);

  LaurentPoly off = q_bracket_poly(2) * q_bracket_poly(2) + LaurentPoly::constant(1);
  CHECK_THROWS_AS(off.div_exact(q_bracket_poly(2)), std::domain_error);
  CHECK_THROWS_AS(q_bracket_poly(2).div_exact(LaurentPoly()), std::domain_error);
}

TEST_CASE("q_multinomial_poly matches the Pascal-recursion oracle") {
  for (const Composition& k : all_compositions_upto(8, 4)) {
    CAPTURE(k.parts());
    CHECK(to_raw(q_multinomial_poly(k)) == pascal_multinomial(k));
  }
}

TEST_CASE("q_multinomial_poly fixed values") {
  CHECK(q_multinomial_poly(Composition({1, 2, 1})).str() ==
        "q^5 + 2*q^3 + 3*q + 3*q^-1 + 2*q^-3 + q^-5");
  CHECK(q_multinomial_poly(Composition({3})).str() == "1");
  CHECK(q_multinomial_poly(Composition({2, 2})).str() == "q^4 + q^2 + 2 + q^-2 + q^-4");
  // Value at q = 1 is the plain multinomial coefficient.
  CHECK(q_multinomial_poly(Composition({1, 2, 1})).evaluate(1.0) == doctest::Approx(12.0));
  CHECK(q_multinomial_poly(Composition({2, 2, 2})).evaluate(1.0) == doctest::Approx(90.0));
  // Permuting the parts leaves the multinomial unchanged.
  CHECK(q_multinomial_poly(Composition({3, 1, 2})) == q_multinomial_poly(Composition({1, 2, 3})));
}

TEST_CASE("q_multinomial_log matches the exact polynomial") {
  for (const Composition& k : all_compositions_upto(8, 3)) {
    for (double q : {0.5, 1.0, 1.07, 2.0}) {
      double exact = std::log(q_multinomial_poly(k).evaluate(q));
      CHECK(q_multinomial_log(k, q) == doctest::Approx(exact).epsilon(1e-11));
    }
  }
}

TEST_CASE("inversion_number fixed values") {
  CHECK(inversion_number(Word::parse("0112")) == 0);
  CHECK(inversion_number(Word::parse("1201")) == 3);
  CHECK(inversion_number(Word::parse("2110")) == 5);
  CHECK(inversion_number(Word::parse("100")) == 2);
  CHECK(inversion_number(Word::parse("010")) == 1);
  CHECK(inversion_number(Word::parse("001")) == 0);
  CHECK(inversion_number(Word{{}}) == 0);
}

TEST_CASE("inversion_number equals BFS sorting distance") {
  for (const Composition& k : all_compositions_upto(5, 3)) {
    auto dist = bfs_sort_distance(k);
    auto words = multiset_permutations(k);
    REQUIRE(dist.size() == words.size());
    for (const Word& w : words) {
      CAPTURE(w.str());
      CHECK(inversion_number(w) == dist.at(w.letters));
    }
  }
}

TEST_CASE("max_inversion is attained exactly by the reversed identity word") {
  CHECK(max_inversion(Composition({1, 2, 1})) == 5);
  CHECK(max_inversion(Composition({2, 1})) == 2);
  CHECK(max_inversion(Composition({4})) == 0);
  for (const Composition& k : all_compositions_upto(6, 4)) {
    Word desc = identity_word(k);
    std::reverse(desc.letters.begin(), desc.letters.end());
    CHECK(inversion_number(desc) == max_inversion(k));
    for (const Word& w : multiset_permutations(k)) CHECK(inversion_number(w) <= max_inversion(k));
  }
}

TEST_CASE("multiset_permutations is complete, duplicate-free, and sorted") {
  auto words = multiset_permutations(Composition({1, 2, 1}));
  REQUIRE(words.size() == 12);
  std::vector<std::string> expect = {"0112", "0121", "0211", "1012", "1021", "1102",
                                     "1120", "1201", "1210", "2011", "2101", "2110"};
  for (std::size_t i = 0; i < words.size(); ++i) CHECK(words[i].str() == expect[i]);

  for (const Composition& k : all_compositions_upto(6, 3)) {
    auto ws = multiset_permutations(k);
    CHECK(static_cast<double>(ws.size()) ==
          doctest::Approx(q_multinomial_poly(k).evaluate(1.0)));
    CHECK(std::is_sorted(ws.begin(), ws.end()));
    CHECK(std::adjacent_find(ws.begin(), ws.end()) == ws.end());
    for (const Word& w : ws) {
      std::vector<int> content(static_cast<std::size_t>(k.d()), 0);
      for (int l : w.letters) content[static_cast<std::size_t>(l)]++;
      CHECK(content == k.parts());
    }
  }
  CHECK_THROWS_AS(multiset_permutations(Composition({16, 16})), ResourceError);
}

TEST_CASE("identity_word and reverse_composition") {
  CHECK(identity_word(Composition({1, 2, 1})).str() == "0112");
  CHECK(identity_word(Composition({0, 3})).str() == "111");
  CHECK(inversion_number(identity_word(Composition({2, 3, 1}))) == 0);
  CHECK(reverse_composition(Composition({1, 2, 0})).parts() == std::vector<int>{0, 2, 1});
  CHECK(reverse_composition(Composition({5})).parts() == std::vector<int>{5});
}

TEST_CASE("inversion identity holds exactly for every small content") {
  for (const Composition& k : all_compositions_upto(6, 3)) {
    CAPTURE(k.parts());
    CHECK(verify_inversion_identity(k));
  }
  CHECK(verify_inversion_identity(Composition({2, 2, 2})));
  CHECK(verify_inversion_identity(Composition({1, 1, 1, 1})));
}

TEST_CASE("a corrupted inversion sum is detected") {
  // Same sum with every exponent shifted by one; must not match the multinomial.
  Composition k({1, 2, 1});
  LaurentPoly sum;
  long long j = max_inversion(k);
  for (const Word& w : multiset_permutations(k))
    sum.add_term(static_cast<int>(2 * (j - 2 * inversion_number(w)) + 2), 1);
  CHECK_FALSE(sum == q_multinomial_poly(k));
}

TEST_CASE("weak_compositions enumerates lexicographically") {
  auto comps = weak_compositions(3, 2);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0].parts() == std::vector<int>{0, 3});
  CHECK(comps[3].parts() == std::vector<int>{3, 0});
  CHECK(std::is_sorted(comps.begin(), comps.end()));
  // Count is C(n + d - 1, d - 1).
  CHECK(weak_compositions(5, 3).size() == 21);
  CHECK(weak_compositions(0, 4).size() == 1);
  for (const Composition& k : weak_compositions(7, 3)) CHECK(k.n() == 7);
}

TEST_CASE("Composition and Word validation") {
  CHECK_THROWS_AS(Composition({}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({1, -1}), std::invalid_argument);
  CHECK(Composition({0, 0}).n() == 0);
  CHECK(Composition({2, 3, 1}).d() == 3);
  CHECK(Composition({2, 3, 1}).n() == 6);
  CHECK_THROWS_AS(Word::parse("01a2"), std::invalid_argument);
  CHECK(Word::parse("120").letters == std::vector<int>{1, 2, 0});
  CHECK(Word{{1, 2, 0}}.str() == "120");
  CHECK_THROWS_AS((Word{{11}}.str()), std::invalid_argument);
}

TEST_CASE("DeformationParam powers stay on one branch") {
  DeformationParam Q(1.3, 2.0 * 3.14159265358979323846 / 3.0);
  // Half powers multiply consistently.
  Cx half = Q.power(0.5);
  CHECK(std::abs(half * half - Q.power(1.0)) < 1e-15);
  // Q^x (1/Q)^x == 1 for half-integers, the branch the duality map needs.
  DeformationParam R = Q.inverse();
  for (double x : {-2.5, -1.0, -0.5, 0.5, 1.0, 3.5}) {
    CHECK(std::abs(Q.power(x) * R.power(x) - Cx(1.0, 0.0)) < 1e-14);
  }
  // Real parameters produce exactly real powers.
  DeformationParam real_q(1.7);
  CHECK(real_q.power(0.5).imag() == 0.0);
  CHECK(real_q.is_real());
  CHECK_FALSE(Q.is_real());
  CHECK_THROWS_AS(DeformationParam(0.0), std::invalid_argument);
  CHECK_THROWS_AS(DeformationParam(-1.0), std::invalid_argument);
}

TEST_CASE("dense_dim guards the memory budget") {
  CHECK(dense_dim(2, 10) == 1024);
  CHECK(dense_dim(3, 0) == 1);
  CHECK(dense_dim(2, 22) == (std::size_t{1} << 22));
  CHECK_THROWS_AS(dense_dim(2, 23), ResourceError);
  CHECK_THROWS_AS(dense_dim(4, 12), ResourceError);
  CHECK_THROWS_AS(dense_dim(0, 3), std::invalid_argument);
}
