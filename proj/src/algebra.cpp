#include "qdicke/algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "qdicke/qcomb.hpp"

namespace qdicke {

namespace {

// verify_commutation builds every generator pair densely; keep it desk-scale.
constexpr std::size_t kMaxVerifyDim = 4096;

void check_generator_index(int d, int i) {
  if (d < 2) throw std::out_of_range("generator index: need d >= 2");
  if (i < 1 || i > d - 1) throw std::out_of_range("generator index: need 1 <= i <= d-1");
}

// I x ... x site(at position j) x ... x I with the given left/right dressing.
SparseOperator dressed_term(int n, int j, const SparseOperator& site,
                            const SparseOperator& left, const SparseOperator& right) {
  SparseOperator out = j == 0 ? site : left;
  for (int p = 1; p < n; ++p)
    out = SparseOperator::kron(out, p == j ? site : (p < j ? left : right));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// SparseOperator

SparseOperator::SparseOperator(int d, int n) : d_(d), n_(n), dim_(dense_dim(d, n)) {}

Cx SparseOperator::at(std::size_t row, std::size_t col) const {
  if (row >= dim_ || col >= dim_) throw std::out_of_range("SparseOperator::at");
  auto it = entries_.find(static_cast<std::uint64_t>(row) * dim_ + col);
  return it == entries_.end() ? Cx(0.0, 0.0) : it->second;
}

void SparseOperator::add(std::size_t row, std::size_t col, Cx v) {
  if (row >= dim_ || col >= dim_) throw std::out_of_range("SparseOperator::add");
  if (v == Cx(0.0, 0.0)) return;
  std::uint64_t key = static_cast<std::uint64_t>(row) * dim_ + col;
  auto [it, inserted] = entries_.emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second == Cx(0.0, 0.0)) entries_.erase(it);
  }
}

SparseOperator SparseOperator::operator+(const SparseOperator& rhs) const {
  if (d_ != rhs.d_ || n_ != rhs.n_) throw std::invalid_argument("operator shapes differ");
  SparseOperator out = *this;
  for (const auto& [key, v] : rhs.entries_) out.add(key / dim_, key % dim_, v);
  return out;
}

SparseOperator SparseOperator::operator-(const SparseOperator& rhs) const {
  if (d_ != rhs.d_ || n_ != rhs.n_) throw std::invalid_argument("operator shapes differ");
  SparseOperator out = *this;
  for (const auto& [key, v] : rhs.entries_) out.add(key / dim_, key % dim_, -v);
  return out;
}

SparseOperator SparseOperator::operator*(const SparseOperator& rhs) const {
  if (d_ != rhs.d_ || n_ != rhs.n_) throw std::invalid_argument("operator shapes differ");
  SparseOperator out(d_, n_);
  for (const auto& [key, va] : entries_) {
    std::size_t row = key / dim_;
    std::size_t mid = key % dim_;
    auto it = rhs.entries_.lower_bound(static_cast<std::uint64_t>(mid) * dim_);
    auto end = rhs.entries_.lower_bound(static_cast<std::uint64_t>(mid + 1) * dim_);
    for (; it != end; ++it) out.add(row, it->first % dim_, va * it->second);
  }
  return out;
}

SparseOperator SparseOperator::scaled(Cx factor) const {
  SparseOperator out(d_, n_);
  if (factor == Cx(0.0, 0.0)) return out;
  for (const auto& [key, v] : entries_) out.entries_.emplace(key, v * factor);
  return out;
}

SparseOperator SparseOperator::adjoint() const {
  SparseOperator out(d_, n_);
  for (const auto& [key, v] : entries_) out.add(key % dim_, key / dim_, std::conj(v));
  return out;
}

std::vector<Cx> SparseOperator::apply(const std::vector<Cx>& vec) const {
  if (vec.size() != dim_) throw std::invalid_argument("SparseOperator::apply: size mismatch");
  std::vector<Cx> out(dim_, Cx(0.0, 0.0));
  for (const auto& [key, v] : entries_) out[key / dim_] += v * vec[key % dim_];
  return out;
}

double SparseOperator::max_abs() const {
  double m = 0.0;
  for (const auto& [key, v] : entries_) m = std::max(m, std::abs(v));
  return m;
}

SparseOperator SparseOperator::identity(int d, int n) {
  SparseOperator out(d, n);
  for (std::size_t i = 0; i < out.dim_; ++i) out.entries_.emplace(i * out.dim_ + i, Cx(1.0, 0.0));
  return out;
}

SparseOperator SparseOperator::kron(const SparseOperator& a, const SparseOperator& b) {
  if (a.d_ != b.d_) throw std::invalid_argument("kron: mixed local dimensions");
  SparseOperator out(a.d_, a.n_ + b.n_);
  for (const auto& [ka, va] : a.entries_) {
    std::size_t ra = ka / a.dim_;
    std::size_t ca = ka % a.dim_;
    for (const auto& [kb, vb] : b.entries_) {
      std::size_t rb = kb / b.dim_;
      std::size_t cb = kb % b.dim_;
      out.entries_.emplace(
          static_cast<std::uint64_t>(ra * b.dim_ + rb) * out.dim_ + (ca * b.dim_ + cb), va * vb);
    }
  }
  return out;
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  return a * b - b * a;
}

// ---------------------------------------------------------------------------
// Generators

SparseOperator site_cartan(int d, int i) {
  check_generator_index(d, i);
  SparseOperator h(d, 1);
  h.add(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(i) - 1, Cx(1.0, 0.0));
  h.add(static_cast<std::size_t>(i), static_cast<std::size_t>(i), Cx(-1.0, 0.0));
  return h;
}

SparseOperator site_chevalley(int d, int i, Sign sign) {
  check_generator_index(d, i);
  SparseOperator x(d, 1);
  if (sign == Sign::plus)
    x.add(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(i), Cx(1.0, 0.0));
  else
    x.add(static_cast<std::size_t>(i), static_cast<std::size_t>(i) - 1, Cx(1.0, 0.0));
  return x;
}

SparseOperator site_cartan_half_power(int d, int i, double q_mag, int sign) {
  check_generator_index(d, i);
  if (!(q_mag > 0.0)) throw std::invalid_argument("site_cartan_half_power: q must be > 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("site_cartan_half_power: sign is +-1");
  SparseOperator p(d, 1);
  double root = std::sqrt(q_mag);
  for (int j = 0; j < d; ++j) {
    double v = 1.0;
    if (j == i - 1) v = sign == 1 ? root : 1.0 / root;
    if (j == i) v = sign == 1 ? 1.0 / root : root;
    p.add(static_cast<std::size_t>(j), static_cast<std::size_t>(j), Cx(v, 0.0));
  }
  return p;
}

SparseOperator coproduct_cartan(int d, int n, int i) {
  check_generator_index(d, i);
  if (n < 1) throw std::out_of_range("coproduct_cartan: need n >= 1");
  SparseOperator site = site_cartan(d, i);
  SparseOperator eye = SparseOperator::identity(d, 1);
  SparseOperator sum(d, n);
  for (int j = 0; j < n; ++j) sum = sum + dressed_term(n, j, site, eye, eye);
  return sum;
}

SparseOperator coproduct_chevalley(int d, int n, int i, Sign sign, double q_mag) {
  check_generator_index(d, i);
  if (n < 1) throw std::out_of_range("coproduct_chevalley: need n >= 1");
  SparseOperator site = site_chevalley(d, i, sign);
  SparseOperator left = site_cartan_half_power(d, i, q_mag, 1);
  SparseOperator right = site_cartan_half_power(d, i, q_mag, -1);
  SparseOperator sum(d, n);
  for (int j = 0; j < n; ++j) sum = sum + dressed_term(n, j, site, left, right);
  return sum;
}

SparseOperator nested_lowering(int d, int n, int j, double q_mag) {
  check_generator_index(d, j);
  SparseOperator acc = coproduct_chevalley(d, n, 1, Sign::minus, q_mag);
  for (int t = 2; t <= j; ++t)
    acc = commutator(coproduct_chevalley(d, n, t, Sign::minus, q_mag), acc);
  return acc;
}

SparseOperator ordered_lowering(int d, int n, int i, double q_mag) {
  check_generator_index(d, i);
  SparseOperator acc = coproduct_chevalley(d, n, 1, Sign::minus, q_mag);
  for (int t = 2; t <= i; ++t)
    acc = coproduct_chevalley(d, n, t, Sign::minus, q_mag) * acc;
  return acc;
}

SparseOperator charge_conjugation(int d, int n) {
  if (d < 2) throw std::invalid_argument("charge_conjugation: need d >= 2");
  SparseOperator c(d, 1);
  for (int j = 0; j < d; ++j)
    c.add(static_cast<std::size_t>(d - 1 - j), static_cast<std::size_t>(j), Cx(1.0, 0.0));
  SparseOperator out = c;
  for (int p = 1; p < n; ++p) out = SparseOperator::kron(out, c);
  return out;
}

SparseOperator diagonal_bracket(const SparseOperator& h, double q_mag) {
  SparseOperator out(h.d(), h.n());
  for (const auto& [key, v] : h.entries()) {
    std::size_t row = key / h.dim();
    std::size_t col = key % h.dim();
    if (row != col) throw std::invalid_argument("diagonal_bracket: operator is not diagonal");
    if (v.imag() != 0.0) throw std::invalid_argument("diagonal_bracket: diagonal must be real");
    out.add(row, col, Cx(q_bracket(v.real(), q_mag), 0.0));
  }
  return out;
}

CommutationReport verify_commutation(int d, int n, double q_mag, double tol) {
  if (dense_dim(d, n) > kMaxVerifyDim)
    throw ResourceError("verify_commutation: dimension too large for the dense check");
  CommutationReport report;
  report.tol = tol;

  std::vector<SparseOperator> h, xp, xm;
  for (int i = 1; i <= d - 1; ++i) {
    h.push_back(coproduct_cartan(d, n, i));
    xp.push_back(coproduct_chevalley(d, n, i, Sign::plus, q_mag));
    xm.push_back(coproduct_chevalley(d, n, i, Sign::minus, q_mag));
  }

  for (int i = 1; i <= d - 1; ++i) {
    for (int j = 1; j <= d - 1; ++j) {
      double a = (i == j ? 2.0 : 0.0) - (i - 1 == j ? 1.0 : 0.0) - (i + 1 == j ? 1.0 : 0.0);
      const auto& hi = h[static_cast<std::size_t>(i) - 1];
      const auto& xpj = xp[static_cast<std::size_t>(j) - 1];
      const auto& xmj = xm[static_cast<std::size_t>(j) - 1];
      report.hx_violation =
          std::max({report.hx_violation, (commutator(hi, xpj) - xpj.scaled(Cx(a, 0.0))).max_abs(),
                    (commutator(hi, xmj) + xmj.scaled(Cx(a, 0.0))).max_abs()});

      SparseOperator pair = commutator(xp[static_cast<std::size_t>(i) - 1], xmj);
      if (i == j) pair = pair - diagonal_bracket(hi, q_mag);
      report.xx_violation = std::max(report.xx_violation, pair.max_abs());
    }
  }

  report.pass = report.hx_violation < tol && report.xx_violation < tol;
  return report;
}

}  // namespace qdicke
