#include "qdicke/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <utility>
#include <vector>

#include "qdicke/algebra.hpp"
#include "qdicke/circuits.hpp"
#include "qdicke/entanglement.hpp"
#include "qdicke/qcomb.hpp"
#include "qdicke/states.hpp"

namespace qdicke {

namespace {

constexpr double kPi = 3.14159265358979323846;

template <typename T>
void subsample(std::vector<T>& cases, const VerifyOptions& opts) {
  if (opts.sample <= 0 || std::cmp_less_equal(cases.size(), opts.sample)) return;
  std::mt19937 rng(opts.seed);
  std::shuffle(cases.begin(), cases.end(), rng);
  cases.erase(cases.begin() + static_cast<std::ptrdiff_t>(opts.sample), cases.end());
}

std::vector<Composition> all_compositions(const VerifyOptions& opts, int min_n) {
  std::vector<Composition> out;
  for (int d = 2; d <= opts.max_d; ++d)
    for (int n = min_n; n <= opts.max_n; ++n)
      for (const Composition& k : weak_compositions(n, d)) out.push_back(k);
  return out;
}

double state_dist(const StateVector& a, const StateVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    m = std::max(m, std::abs(a.amplitudes[i] - b.amplitudes[i]));
  return m;
}

long long cut_exponent(const Composition& k, const Cut& a) {
  long long e = 0;
  for (int i = 0; i < k.d(); ++i)
    for (int j = i + 1; j < k.d(); ++j)
      e += static_cast<long long>(a[i]) * k[j] - static_cast<long long>(a[j]) * k[i];
  return e;
}

SuiteResult suite_inversion_identity(const VerifyOptions& opts) {
  SuiteResult r{"inversion-identity", 0, 0.0, 0.0, true};
  auto cases = all_compositions(opts, 1);
  subsample(cases, opts);
  for (const Composition& k : cases) {
    ++r.cases;
    if (!verify_inversion_identity(k)) {
      r.pass = false;
      r.max_dev = 1.0;
    }
  }
  return r;
}

SuiteResult suite_q_vandermonde(const VerifyOptions& opts) {
  SuiteResult r{"q-vandermonde", 0, 0.0, 0.0, true};
  std::vector<std::pair<Composition, int>> cases;
  for (const Composition& k : all_compositions(opts, 2))
    for (int l = 1; l <= k.n() - 1; ++l) cases.emplace_back(k, l);
  subsample(cases, opts);
  for (const auto& [k, l] : cases) {
    ++r.cases;
    if (!verify_q_vandermonde(k, l)) {
      r.pass = false;
      r.max_dev = 1.0;
    }
  }
  return r;
}

SuiteResult suite_constructor_agreement(const VerifyOptions& opts) {
  SuiteResult r{"constructor-agreement", 0, 0.0, 1e-10, true};
  std::vector<std::pair<Composition, double>> cases;
  for (const Composition& k : all_compositions(opts, 1))
    for (double q : {0.5, 1.0, 2.0}) cases.emplace_back(k, q);
  subsample(cases, opts);
  for (const auto& [k, q] : cases) {
    ++r.cases;
    const DeformationParam Q(q);
    const StateVector ref = dicke_sum(k, Q);
    r.max_dev = std::max(r.max_dev, state_dist(ref, dicke_recursive(k, Q)));
    r.max_dev = std::max(r.max_dev, state_dist(ref, dicke_operator(k, q)));
  }
  r.pass = r.max_dev <= r.tolerance;
  return r;
}

SuiteResult suite_schmidt_reconstruct(const VerifyOptions& opts) {
  SuiteResult r{"schmidt-reconstruct", 0, 0.0, 1e-12, true};
  struct Case {
    Composition k;
    int l;
    DeformationParam Q;
  };
  std::vector<Case> cases;
  const std::vector<DeformationParam> params = {
      DeformationParam(0.5), DeformationParam(1.0), DeformationParam(2.0),
      DeformationParam(1.0, 2.0 * kPi / 3.0), DeformationParam(1.2, kPi / 4.0)};
  for (const Composition& k : all_compositions(opts, 2))
    for (int l = 1; l <= k.n() - 1; ++l)
      for (const DeformationParam& Q : params) cases.push_back({k, l, Q});
  subsample(cases, opts);
  for (const auto& c : cases) {
    ++r.cases;
    r.max_dev = std::max(
        r.max_dev, state_dist(dicke_sum(c.k, c.Q), schmidt_reconstruct(c.k, c.Q, c.l)));
  }
  r.pass = r.max_dev <= r.tolerance;
  return r;
}

SuiteResult suite_entropy_oracle(const VerifyOptions& opts) {
  SuiteResult r{"entropy-oracle", 0, 0.0, 1e-9, true};
  struct Case {
    Composition k;
    int l;
    double q;
  };
  std::vector<Case> cases;
  for (const Composition& k : all_compositions(opts, 2))
    for (int l = 1; l <= k.n() - 1; ++l)
      for (double q : {0.5, 1.0, 1.07, 2.0}) cases.push_back({k, l, q});
  subsample(cases, opts);
  for (const auto& c : cases) {
    ++r.cases;
    double formula;
    if (opts.flip_lambda_sign) {
      // Corrupted path for the mutation smoke test: wrong exponent sign.
      double s = 0.0;
      for (const Cut& a : enumerate_cuts(c.k, c.l)) {
        const double lambda = schmidt_coefficient(c.k, a, c.l, c.q) *
                              std::pow(c.q, -2.0 * static_cast<double>(cut_exponent(c.k, a)));
        s -= lambda * std::log(lambda);
      }
      formula = s / std::log(static_cast<double>(c.k.d()));
    } else {
      formula = entanglement_entropy(c.k, c.q, c.l);
    }
    const double oracle = entropy_bruteforce(dicke_sum(c.k, DeformationParam(c.q)), c.l);
    r.max_dev = std::max(r.max_dev, std::abs(formula - oracle));
  }
  r.pass = r.max_dev <= r.tolerance;
  return r;
}

SuiteResult suite_circuit_fidelity(const VerifyOptions& opts) {
  SuiteResult r{"circuit-fidelity", 0, 0.0, 1e-10, true};
  struct Case {
    int n;
    int l;
    DeformationParam Q;
  };
  std::vector<Case> cases;
  for (int n = 2; n <= opts.max_n; ++n)
    for (int l = 1; l <= n - 1; ++l)
      for (double q : {0.5, 1.0, 2.0})
        for (double alpha : {0.0, 2.0 * kPi / 3.0})
          cases.push_back({n, l, DeformationParam(q, alpha)});
  subsample(cases, opts);
  for (const auto& c : cases) {
    ++r.cases;
    const FidelityReport rep = prepare_and_verify(c.n, c.l, c.Q);
    r.max_dev = std::max(r.max_dev, 1.0 - rep.fidelity_full);
    r.max_dev = std::max(r.max_dev, 1.0 - rep.fidelity_pruned);
    if (rep.gates_pruned != gate_count(c.n, c.l)) {
      r.pass = false;
      r.max_dev = std::max(r.max_dev, 1.0);
    }
  }
  if (r.max_dev > r.tolerance) r.pass = false;
  return r;
}

SuiteResult suite_algebra_commutation(const VerifyOptions& opts) {
  SuiteResult r{"algebra-commutation", 0, 0.0, 1e-12, true};
  struct Case {
    int d;
    int n;
    double q;
  };
  std::vector<Case> cases;
  for (int d = 2; d <= opts.max_d; ++d)
    for (int n = 1; n <= opts.max_n; ++n) {
      double dim = std::pow(d, n);
      if (dim > 4096.0) continue;
      for (double q : {0.5, 1.3, 2.0}) cases.push_back({d, n, q});
    }
  subsample(cases, opts);
  for (const auto& c : cases) {
    ++r.cases;
    const CommutationReport rep = verify_commutation(c.d, c.n, c.q, r.tolerance);
    r.max_dev = std::max({r.max_dev, rep.hx_violation, rep.xx_violation});
  }
  r.pass = r.max_dev <= r.tolerance;
  return r;
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& opts) {
  return {suite_inversion_identity(opts), suite_q_vandermonde(opts),
          suite_constructor_agreement(opts), suite_schmidt_reconstruct(opts),
          suite_entropy_oracle(opts),       suite_circuit_fidelity(opts),
          suite_algebra_commutation(opts)};
}

std::string format_report(const std::vector<SuiteResult>& results) {
  std::string out;
  for (const SuiteResult& r : results) {
    char line[160];
    std::snprintf(line, sizeof line, "%-24s cases=%-6lld max_dev=%-12.3g %s\n",
                  r.name.c_str(), r.cases, r.max_dev, r.pass ? "PASS" : "FAIL");
    out += line;
  }
  return out;
}

bool all_pass(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.pass; });
}

}  // namespace qdicke
