#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qdicke/algebra.hpp"
#include "qdicke/qcomb.hpp"

using namespace qdicke;

namespace {

std::vector<Cx> basis_vec(std::size_t dim, std::size_t idx) {
  std::vector<Cx> v(dim, Cx(0.0, 0.0));
  v[idx] = Cx(1.0, 0.0);
  return v;
}

double max_abs_diff(const SparseOperator& a, const SparseOperator& b) {
  return (a - b).max_abs();
}

double vec_dist(const std::vector<Cx>& a, const std::vector<Cx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Dense matrix product oracle, independent of SparseOperator::operator*.
using Dense = std::vector<std::vector<Cx>>;

Dense to_dense(const SparseOperator& op) {
  Dense m(op.dim(), std::vector<Cx>(op.dim(), Cx(0.0, 0.0)));
  for (const auto& [key, v] : op.entries()) m[key / op.dim()][key % op.dim()] = v;
  return m;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  std::size_t dim = a.size();
  Dense out(dim, std::vector<Cx>(dim, Cx(0.0, 0.0)));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t c = 0; c < dim; ++c) out[r][c] += a[r][k] * b[k][c];
  return out;
}

std::size_t word_index(const std::vector<int>& letters, int d) {
  std::size_t idx = 0;
  for (int l : letters) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(l);
  return idx;
}

SparseOperator kron_power(const SparseOperator& a, int count) {
  SparseOperator out = a;
  for (int i = 1; i < count; ++i) out = SparseOperator::kron(out, a);
  return out;
}

}  // namespace

TEST_CASE("site_cartan matches its diagonal form and single-site action") {
  SparseOperator z = site_cartan(2, 1);
  CHECK(z.at(0, 0) == Cx(1.0, 0.0));
  CHECK(z.at(1, 1) == Cx(-1.0, 0.0));
  CHECK(z.at(0, 1) == Cx(0.0, 0.0));

  SparseOperator h32 = site_cartan(3, 2);
  CHECK(h32.at(0, 0) == Cx(0.0, 0.0));
  CHECK(h32.at(1, 1) == Cx(1.0, 0.0));
  CHECK(h32.at(2, 2) == Cx(-1.0, 0.0));

  // H_i |j> = (delta_{i,j+1} - delta_{i,j}) |j>.
  for (int d = 2; d <= 4; ++d)
    for (int i = 1; i <= d - 1; ++i)
      for (int j = 0; j < d; ++j) {
        auto out = site_cartan(d, i).apply(basis_vec(static_cast<std::size_t>(d),
                                                     static_cast<std::size_t>(j)));
        double expect = (i == j + 1 ? 1.0 : 0.0) - (i == j ? 1.0 : 0.0);
        CHECK(std::abs(out[static_cast<std::size_t>(j)] - Cx(expect, 0.0)) == 0.0);
      }

  CHECK_THROWS_AS(site_cartan(3, 0), std::out_of_range);
  CHECK_THROWS_AS(site_cartan(3, 3), std::out_of_range);
}

TEST_CASE("site_chevalley ladder action and adjoint pairing") {
  SparseOperator xm = site_chevalley(2, 1, Sign::minus);
  auto lowered = xm.apply(basis_vec(2, 0));
  CHECK(lowered[1] == Cx(1.0, 0.0));
  CHECK(vec_dist(xm.apply(basis_vec(2, 1)), std::vector<Cx>(2, Cx(0.0, 0.0))) == 0.0);

  SparseOperator xp32 = site_chevalley(3, 2, Sign::plus);
  CHECK(xp32.apply(basis_vec(3, 2))[1] == Cx(1.0, 0.0));
  CHECK(vec_dist(xp32.apply(basis_vec(3, 0)), std::vector<Cx>(3, Cx(0.0, 0.0))) == 0.0);
  CHECK(vec_dist(xp32.apply(basis_vec(3, 1)), std::vector<Cx>(3, Cx(0.0, 0.0))) == 0.0);

  for (int d = 2; d <= 4; ++d)
    for (int i = 1; i <= d - 1; ++i)
      CHECK(max_abs_diff(site_chevalley(d, i, Sign::plus).adjoint(),
                         site_chevalley(d, i, Sign::minus)) == 0.0);

  CHECK_THROWS_AS(site_chevalley(2, 2, Sign::plus), std::out_of_range);
}

TEST_CASE("coproduct_cartan diagonal and content eigenvalues") {
  CHECK(max_abs_diff(coproduct_cartan(3, 1, 2), site_cartan(3, 2)) == 0.0);

  SparseOperator h = coproduct_cartan(2, 2, 1);
  CHECK(h.at(0, 0) == Cx(2.0, 0.0));
  CHECK(h.at(1, 1) == Cx(0.0, 0.0));
  CHECK(h.at(2, 2) == Cx(0.0, 0.0));
  CHECK(h.at(3, 3) == Cx(-2.0, 0.0));

  // Every word of content k is an eigenvector with eigenvalue k_{i-1} - k_i.
  for (int d = 2; d <= 3; ++d)
    for (int n = 1; n <= 4; ++n)
      for (const Composition& k : weak_compositions(n, d))
        for (int i = 1; i <= d - 1; ++i) {
          SparseOperator hi = coproduct_cartan(d, n, i);
          for (const Word& w : multiset_permutations(k)) {
            std::size_t idx = word_index(w.letters, d);
            auto out = hi.apply(basis_vec(hi.dim(), idx));
            double expect = static_cast<double>(k[i - 1] - k[i]);
            CHECK(std::abs(out[idx] - Cx(expect, 0.0)) < 1e-15);
          }
        }
}

TEST_CASE("coproduct_chevalley limits and the defining recursion") {
  for (int d = 2; d <= 3; ++d)
    for (int i = 1; i <= d - 1; ++i) {
      CHECK(max_abs_diff(coproduct_chevalley(d, 1, i, Sign::minus, 1.7),
                         site_chevalley(d, i, Sign::minus)) == 0.0);
      CHECK(max_abs_diff(coproduct_chevalley(d, 1, i, Sign::plus, 0.4),
                         site_chevalley(d, i, Sign::plus)) == 0.0);
    }

  // q = 1: dressing collapses to the undeformed coproduct.
  for (int n = 1; n <= 3; ++n) {
    SparseOperator plain(2, n);
    SparseOperator eye = SparseOperator::identity(2, 1);
    SparseOperator x = site_chevalley(2, 1, Sign::minus);
    for (int j = 0; j < n; ++j) {
      SparseOperator term = (j == 0) ? x : eye;
      for (int p = 1; p < n; ++p) term = SparseOperator::kron(term, p == j ? x : eye);
      plain = plain + term;
    }
    CHECK(max_abs_diff(coproduct_chevalley(2, n, 1, Sign::minus, 1.0), plain) == 0.0);
  }

  // X(n) = (q^(h/2))^(x(n-1)) kron X(1) + X(n-1) kron q^(-h/2).
  for (int d = 2; d <= 3; ++d)
    for (int i = 1; i <= d - 1; ++i)
      for (double q : {0.5, 1.0, 2.0})
        for (int n = 2; n <= 4; ++n)
          for (Sign sign : {Sign::plus, Sign::minus}) {
            SparseOperator lhs = coproduct_chevalley(d, n, i, sign, q);
            SparseOperator rhs =
                SparseOperator::kron(kron_power(site_cartan_half_power(d, i, q, 1), n - 1),
                                     site_chevalley(d, i, sign)) +
                SparseOperator::kron(coproduct_chevalley(d, n - 1, i, sign, q),
                                     site_cartan_half_power(d, i, q, -1));
            CHECK(max_abs_diff(lhs, rhs) < 1e-12);
          }
}

TEST_CASE("nested_lowering reaches every level from the single-qudit vacuum") {
  for (int d = 2; d <= 4; ++d)
    for (int j = 1; j <= d - 1; ++j) {
      auto out = nested_lowering(d, 1, j, 1.3).apply(basis_vec(static_cast<std::size_t>(d), 0));
      CHECK(vec_dist(out, basis_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(j))) <
            1e-14);
    }
  CHECK(max_abs_diff(nested_lowering(3, 2, 1, 1.5), coproduct_chevalley(3, 2, 1, Sign::minus, 1.5)) ==
        0.0);
}

TEST_CASE("nested_lowering agrees with a dense commutator") {
  SparseOperator x2 = coproduct_chevalley(3, 2, 2, Sign::minus, 1.3);
  SparseOperator x1 = coproduct_chevalley(3, 2, 1, Sign::minus, 1.3);
  Dense lhs = to_dense(nested_lowering(3, 2, 2, 1.3));
  Dense ab = dense_mul(to_dense(x2), to_dense(x1));
  Dense ba = dense_mul(to_dense(x1), to_dense(x2));
  double m = 0.0;
  for (std::size_t r = 0; r < lhs.size(); ++r)
    for (std::size_t c = 0; c < lhs.size(); ++c)
      m = std::max(m, std::abs(lhs[r][c] - (ab[r][c] - ba[r][c])));
  CHECK(m < 1e-13);

  auto on_vacuum = nested_lowering(3, 2, 2, 1.3).apply(basis_vec(9, 0));
  // |00> -> (something) in the two-letter charge-2 sector {02, 11, 20}.
  for (std::size_t idx : {0u, 1u, 3u, 4u, 7u, 8u}) CHECK(std::abs(on_vacuum[idx]) < 1e-14);
}

TEST_CASE("ordered_lowering product structure and single-qudit action") {
  for (int d = 2; d <= 3; ++d) {
    CHECK(max_abs_diff(ordered_lowering(d, 2, 1, 1.4),
                       coproduct_chevalley(d, 2, 1, Sign::minus, 1.4)) == 0.0);
  }
  for (int d = 2; d <= 4; ++d)
    for (int i = 1; i <= d - 1; ++i)
      for (int j = 0; j < d; ++j) {
        auto out = ordered_lowering(d, 1, i, 0.7).apply(
            basis_vec(static_cast<std::size_t>(d), static_cast<std::size_t>(j)));
        std::vector<Cx> expect(static_cast<std::size_t>(d), Cx(0.0, 0.0));
        if (j == 0) expect[static_cast<std::size_t>(i)] = Cx(1.0, 0.0);
        CHECK(vec_dist(out, expect) < 1e-14);
      }
}

TEST_CASE("ordered and nested lowering agree on the vacuum") {
  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 4; ++n)
      for (int i = 1; i <= d - 1; ++i)
        for (double q : {0.5, 1.5}) {
          std::size_t dim = dense_dim(d, n);
          auto a = ordered_lowering(d, n, i, q).apply(basis_vec(dim, 0));
          auto b = nested_lowering(d, n, i, q).apply(basis_vec(dim, 0));
          CAPTURE(d);
          CAPTURE(n);
          CAPTURE(i);
          CHECK(vec_dist(a, b) < 1e-12);
        }
}

TEST_CASE("commutation relations hold on the verification grid") {
  for (int d = 2; d <= 3; ++d)
    for (int n = 1; n <= 3; ++n)
      for (double q : {0.5, 1.3, 2.0}) {
        CommutationReport report = verify_commutation(d, n, q, 1e-12);
        CAPTURE(d);
        CAPTURE(n);
        CAPTURE(q);
        CHECK(report.pass);
        CHECK(report.hx_violation < 1e-12);
        CHECK(report.xx_violation < 1e-12);
      }
  CHECK(verify_commutation(2, 3, 1.7, 1e-12).pass);
  CHECK(verify_commutation(3, 2, 1.0, 1e-12).pass);
  CHECK_THROWS_AS(verify_commutation(4, 7, 1.3, 1e-12), ResourceError);
}

TEST_CASE("mixed ladder commutators vanish for i != j") {
  SparseOperator c = commutator(coproduct_chevalley(3, 2, 1, Sign::plus, 1.3),
                                coproduct_chevalley(3, 2, 2, Sign::minus, 1.3));
  CHECK(c.max_abs() < 1e-12);
}

TEST_CASE("charge_conjugation is the qubit X product and an involution") {
  SparseOperator x(2, 1);
  x.add(0, 1, Cx(1.0, 0.0));
  x.add(1, 0, Cx(1.0, 0.0));
  for (int n = 1; n <= 3; ++n)
    CHECK(max_abs_diff(charge_conjugation(2, n), kron_power(x, n)) == 0.0);

  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 3; ++n) {
      SparseOperator c = charge_conjugation(d, n);
      CHECK(max_abs_diff(c * c, SparseOperator::identity(d, n)) == 0.0);
    }

  CHECK(charge_conjugation(3, 1).at(1, 1) == Cx(1.0, 0.0));
  CHECK(charge_conjugation(3, 1).at(0, 2) == Cx(1.0, 0.0));
}

TEST_CASE("diagonal_bracket deforms the Cartan spectrum") {
  SparseOperator h = coproduct_cartan(2, 2, 1);
  SparseOperator bh = diagonal_bracket(h, 2.0);
  CHECK(std::abs(bh.at(0, 0) - Cx(q_bracket(2, 2.0), 0.0)) < 1e-15);
  CHECK(bh.at(1, 1) == Cx(0.0, 0.0));
  CHECK(std::abs(bh.at(3, 3) - Cx(q_bracket(-2, 2.0), 0.0)) < 1e-15);
  CHECK_THROWS_AS(diagonal_bracket(site_chevalley(2, 1, Sign::plus), 1.3), std::invalid_argument);
}

TEST_CASE("SparseOperator algebra basics") {
  SparseOperator a(2, 1);
  a.add(0, 0, Cx(1.0, 0.0));
  a.add(0, 0, Cx(-1.0, 0.0));
  CHECK(a.entries().empty());  // exact cancellation leaves no stored zero

  SparseOperator b = SparseOperator::identity(2, 2);
  CHECK(b.dim() == 4);
  CHECK_THROWS_AS(b.at(4, 0), std::out_of_range);
  CHECK_THROWS_AS(b.apply(std::vector<Cx>(3)), std::invalid_argument);

  // (AB)^dagger = B^dagger A^dagger on a random-ish pair.
  SparseOperator p = coproduct_chevalley(2, 2, 1, Sign::plus, 1.6);
  SparseOperator m = coproduct_chevalley(2, 2, 1, Sign::minus, 0.8);
  CHECK(max_abs_diff((p * m).adjoint(), m.adjoint() * p.adjoint()) < 1e-14);

  // Dense multiplication oracle for the sparse product.
  Dense dp = dense_mul(to_dense(p), to_dense(m));
  Dense sp = to_dense(p * m);
  double mx = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) mx = std::max(mx, std::abs(dp[r][c] - sp[r][c]));
  CHECK(mx == 0.0);

  CHECK_THROWS_AS(SparseOperator(2, 23), ResourceError);
}
