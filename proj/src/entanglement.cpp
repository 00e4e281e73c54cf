#include "qdicke/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qdicke {

namespace {

// Largest Gram side the Jacobi oracle will diagonalize.
constexpr std::size_t kMaxGramSide = 256;

void check_cut_length(const Composition& k, int l) {
  if (l < 1 || l > k.n() - 1)
    throw std::out_of_range("cut length l must satisfy 1 <= l <= n-1");
}

bool is_valid_cut(const Composition& k, const Cut& a, int l) {
  if (a.d() != k.d() || a.n() != l) return false;
  for (int i = 0; i < k.d(); ++i)
    if (a[i] < 0 || a[i] > k[i]) return false;
  return true;
}

// sum_{i<j} (a_i k_j - a_j k_i); the q-exponent attached to a cut.
long long cut_exponent(const Composition& k, const Cut& a) {
  long long e = 0;
  for (int i = 0; i < k.d(); ++i)
    for (int j = i + 1; j < k.d(); ++j)
      e += static_cast<long long>(a[i]) * k[j] - static_cast<long long>(a[j]) * k[i];
  return e;
}

Composition cut_complement(const Composition& k, const Cut& a) {
  std::vector<int> parts(static_cast<std::size_t>(k.d()));
  for (int i = 0; i < k.d(); ++i) parts[static_cast<std::size_t>(i)] = k[i] - a[i];
  return Composition(std::move(parts));
}

double log_multinomial_from_table(const std::vector<int>& parts, int total,
                                  const std::vector<double>& log_fact) {
  double sum = log_fact[static_cast<std::size_t>(total)];
  for (int p : parts) sum -= log_fact[static_cast<std::size_t>(p)];
  return sum;
}

double entropy_from_log_lambdas(const Composition& k, int l, double q_mag,
                                const std::vector<double>& log_fact) {
  const double log_q = std::log(q_mag);
  const double log_d = std::log(static_cast<double>(k.d()));
  const double log_norm = log_multinomial_from_table(k.parts(), k.n(), log_fact);
  double entropy = 0.0;
  for (const Cut& a : enumerate_cuts(k, l)) {
    Composition b = cut_complement(k, a);
    double log_lambda = static_cast<double>(cut_exponent(k, a)) * log_q +
                        log_multinomial_from_table(a.parts(), l, log_fact) +
                        log_multinomial_from_table(b.parts(), k.n() - l, log_fact) - log_norm;
    entropy -= std::exp(log_lambda) * log_lambda / log_d;
  }
  return entropy;
}

// In-place cyclic Jacobi diagonalization of a Hermitian m x m matrix stored
// row-major; returns the diagonal.  Stops when the off-diagonal Frobenius
// norm drops below 1e-13 or after 100 sweeps.
std::vector<double> jacobi_eigenvalues(std::vector<Cx>& g, std::size_t m) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t r = 0; r < m; ++r)
        if (p != r) off += std::norm(g[p * m + r]);
    if (std::sqrt(off) < 1e-13) break;

    for (std::size_t p = 0; p + 1 < m; ++p) {
      for (std::size_t r = p + 1; r < m; ++r) {
        Cx apq = g[p * m + r];
        double mag = std::abs(apq);
        if (mag == 0.0) continue;
        double phase = std::arg(apq);
        double tau = (g[r * m + r].real() - g[p * m + p].real()) / (2.0 * mag);
        double t = tau == 0.0 ? 1.0
                              : (tau > 0.0 ? 1.0 : -1.0) /
                                    (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        Cx e_pos = std::polar(1.0, phase);
        Cx e_neg = std::polar(1.0, -phase);
        for (std::size_t i = 0; i < m; ++i) {  // A <- A J
          Cx aip = g[i * m + p];
          Cx air = g[i * m + r];
          g[i * m + p] = c * aip - s * e_neg * air;
          g[i * m + r] = s * e_pos * aip + c * air;
        }
        for (std::size_t i = 0; i < m; ++i) {  // A <- J^dagger A
          Cx api = g[p * m + i];
          Cx ari = g[r * m + i];
          g[p * m + i] = c * api - s * e_pos * ari;
          g[r * m + i] = s * e_neg * api + c * ari;
        }
      }
    }
  }
  std::vector<double> eig(m);
  for (std::size_t i = 0; i < m; ++i) eig[i] = g[i * m + i].real();
  return eig;
}

}  // namespace

std::vector<Cut> enumerate_cuts(const Composition& k, int l) {
  check_cut_length(k, l);
  std::vector<Cut> cuts;
  std::vector<int> parts(static_cast<std::size_t>(k.d()), 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == k.d() - 1) {
      if (rest <= k[pos]) {
        parts[static_cast<std::size_t>(pos)] = rest;
        cuts.push_back(Composition(parts));
      }
      return;
    }
    for (int v = 0; v <= std::min(k[pos], rest); ++v) {
      parts[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, l);
  return cuts;
}

double schmidt_coefficient(const Composition& k, const Cut& a, int l, double q_mag) {
  check_cut_length(k, l);
  if (!(q_mag > 0.0)) throw std::invalid_argument("schmidt_coefficient: q must be > 0");
  if (!is_valid_cut(k, a, l)) throw std::invalid_argument("schmidt_coefficient: invalid cut");
  auto log_fact = log_q_factorial_table(k.n(), q_mag);
  Composition b = cut_complement(k, a);
  double log_lambda = static_cast<double>(cut_exponent(k, a)) * std::log(q_mag) +
                      log_multinomial_from_table(a.parts(), l, log_fact) +
                      log_multinomial_from_table(b.parts(), k.n() - l, log_fact) -
                      log_multinomial_from_table(k.parts(), k.n(), log_fact);
  return std::exp(log_lambda);
}

StateVector schmidt_reconstruct(const Composition& k, const DeformationParam& Q, int l) {
  check_cut_length(k, l);
  const int d = k.d();
  const int n = k.n();
  StateVector out{d, n, std::vector<Cx>(dense_dim(d, n), Cx(0.0, 0.0))};
  const std::size_t right_dim = dense_dim(d, n - l);
  for (const Cut& a : enumerate_cuts(k, l)) {
    Composition b = cut_complement(k, a);
    double lambda = schmidt_coefficient(k, a, l, Q.magnitude);
    Cx coeff = std::sqrt(lambda);
    if (Q.phase != 0.0)
      coeff *= std::polar(1.0, 0.5 * Q.phase * static_cast<double>(cut_exponent(k, a)));
    StateVector left = dicke_sum(a, Q);
    StateVector right = dicke_sum(b, Q);
    for (std::size_t ia = 0; ia < left.dim(); ++ia) {
      if (left.amplitudes[ia] == Cx(0.0, 0.0)) continue;
      Cx scaled = coeff * left.amplitudes[ia];
      for (std::size_t ib = 0; ib < right.dim(); ++ib) {
        if (right.amplitudes[ib] == Cx(0.0, 0.0)) continue;
        out.amplitudes[ia * right_dim + ib] += scaled * right.amplitudes[ib];
      }
    }
  }
  return out;
}

double entanglement_entropy(const Composition& k, double q_mag, int l) {
  check_cut_length(k, l);
  if (!(q_mag > 0.0)) throw std::invalid_argument("entanglement_entropy: q must be > 0");
  return entropy_from_log_lambdas(k, l, q_mag, log_q_factorial_table(k.n(), q_mag));
}

double entropy_bruteforce(const StateVector& state, int l) {
  if (l < 1 || l > state.n - 1)
    throw std::out_of_range("cut length l must satisfy 1 <= l <= n-1");
  const std::size_t rows = dense_dim(state.d, l);
  const std::size_t cols = dense_dim(state.d, state.n - l);
  // The Gram matrix is formed on the smaller side of the reshape; both sides
  // share the nonzero spectrum.
  const std::size_t m = std::min(rows, cols);
  const std::size_t other = std::max(rows, cols);
  if (m > kMaxGramSide)
    throw ResourceError("entropy_bruteforce: Gram side " + std::to_string(m) +
                        " exceeds the dense budget");
  const bool row_side = rows <= cols;
  std::vector<Cx> gram(m * m, Cx(0.0, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Cx sum(0.0, 0.0);
      for (std::size_t t = 0; t < other; ++t) {
        // Row-side Gram is M M^dagger; column-side is M^dagger M.
        Cx u = row_side ? state.amplitudes[i * cols + t] : state.amplitudes[t * cols + i];
        Cx v = row_side ? state.amplitudes[j * cols + t] : state.amplitudes[t * cols + j];
        sum += u * std::conj(v);
      }
      gram[i * m + j] = sum;
      gram[j * m + i] = std::conj(sum);
    }
  }
  std::vector<double> eig = jacobi_eigenvalues(gram, m);
  double entropy = 0.0;
  const double log_d = std::log(static_cast<double>(state.d));
  for (double lambda : eig)
    if (lambda > 1e-14) entropy -= lambda * std::log(lambda) / log_d;
  return entropy;
}

bool verify_q_vandermonde(const Composition& k, int l) {
  check_cut_length(k, l);
  LaurentPoly lhs;
  for (const Cut& a : enumerate_cuts(k, l)) {
    Composition b = cut_complement(k, a);
    LaurentPoly term = q_multinomial_poly(a) * q_multinomial_poly(b);
    lhs = lhs + term * LaurentPoly::half_power(2 * static_cast<int>(cut_exponent(k, a)));
  }
  return lhs == q_multinomial_poly(k);
}

EntropyCurve entropy_curve(const Composition& k, double q_mag) {
  if (!(q_mag > 0.0)) throw std::invalid_argument("entropy_curve: q must be > 0");
  if (k.n() < 2) return EntropyCurve{k, q_mag, {}};
  auto log_fact = log_q_factorial_table(k.n(), q_mag);
  EntropyCurve curve{k, q_mag, {}};
  curve.rows.reserve(static_cast<std::size_t>(k.n()) - 1);
  for (int l = 1; l <= k.n() - 1; ++l)
    curve.rows.emplace_back(l, entropy_from_log_lambdas(k, l, q_mag, log_fact));
  return curve;
}

std::string entropy_csv(const EntropyCurve& curve) {
  std::string out = "l,S\n";
  char buf[64];
  for (const auto& [l, s] : curve.rows) {
    std::snprintf(buf, sizeof(buf), "%d,%.12g\n", l, s);
    out += buf;
  }
  return out;
}

std::string entropy_csv_filename(const EntropyCurve& curve) {
  std::string joined;
  for (int i = 0; i < curve.k.d(); ++i) {
    if (i) joined += "-";
    joined += std::to_string(curve.k[i]);
  }
  char q[32];
  std::snprintf(q, sizeof(q), "%g", curve.q_mag);
  return std::to_string(curve.k.d()) + "_" + std::to_string(curve.k.n()) + "_" + joined + "_" +
         q + ".csv";
}

}  // namespace qdicke
