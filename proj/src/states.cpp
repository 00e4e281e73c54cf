#include "qdicke/states.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "qdicke/algebra.hpp"

namespace qdicke {

namespace {

void check_constructible(const Composition& k) {
  if (k.n() < 1) throw std::invalid_argument("Dicke state: need n >= 1");
  dense_dim(k.d(), k.n());  // throws ResourceError past the budget
}

std::vector<int> word_content(const Word& w, int d) {
  std::vector<int> content(static_cast<std::size_t>(d), 0);
  for (int l : w.letters) {
    if (l < 0 || l >= d) throw std::domain_error("word letter outside the alphabet");
    content[static_cast<std::size_t>(l)]++;
  }
  return content;
}

}  // namespace

double StateVector::norm() const {
  double sum = 0.0;
  for (const Cx& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

std::size_t word_to_index(const Word& w, int d) {
  if (d < 1) throw std::invalid_argument("word_to_index: need d >= 1");
  std::size_t idx = 0;
  for (int l : w.letters) {
    if (l < 0 || l >= d) throw std::invalid_argument("word_to_index: letter outside alphabet");
    idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(l);
  }
  return idx;
}

Word index_to_word(std::size_t idx, int d, int n) {
  if (d < 1 || n < 0) throw std::invalid_argument("index_to_word: need d >= 1, n >= 0");
  Word w;
  w.letters.assign(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    w.letters[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(d));
    idx /= static_cast<std::size_t>(d);
  }
  if (idx != 0) throw std::invalid_argument("index_to_word: index out of range");
  return w;
}

Cx amplitude(const Composition& k, const DeformationParam& Q, const Word& w) {
  if (word_content(w, k.d()) != k.parts())
    throw std::domain_error("amplitude: word is not a rearrangement of the content");
  double exponent = 0.5 * static_cast<double>(max_inversion(k)) -
                    static_cast<double>(inversion_number(w));
  double inv_sqrt_norm = std::exp(-0.5 * q_multinomial_log(k, Q.magnitude));
  return Q.power(exponent) * inv_sqrt_norm;
}

StateVector dicke_sum(const Composition& k, const DeformationParam& Q) {
  check_constructible(k);
  StateVector state{k.d(), k.n(), std::vector<Cx>(dense_dim(k.d(), k.n()), Cx(0.0, 0.0))};
  const double half_j = 0.5 * static_cast<double>(max_inversion(k));
  const double inv_sqrt_norm = std::exp(-0.5 * q_multinomial_log(k, Q.magnitude));
  Word w = identity_word(k);
  do {
    double exponent = half_j - static_cast<double>(inversion_number(w));
    state.amplitudes[word_to_index(w, k.d())] = Q.power(exponent) * inv_sqrt_norm;
  } while (std::next_permutation(w.letters.begin(), w.letters.end()));
  return state;
}

StateVector dicke_recursive(const Composition& k, const DeformationParam& Q) {
  check_constructible(k);
  const int d = k.d();
  std::map<std::vector<int>, std::vector<Cx>> memo;

  auto build = [&](auto&& self, const std::vector<int>& parts) -> const std::vector<Cx>& {
    auto found = memo.find(parts);
    if (found != memo.end()) return found->second;

    int n = 0;
    for (int p : parts) n += p;
    std::vector<Cx> vec(dense_dim(d, n), Cx(0.0, 0.0));
    if (n == 1) {
      for (int s = 0; s < d; ++s)
        if (parts[static_cast<std::size_t>(s)] == 1) vec[static_cast<std::size_t>(s)] = 1.0;
    } else {
      double bracket_n = q_bracket(n, Q.magnitude);
      int left = 0;       // sum of parts before s
      int right = n;      // sum of parts after s
      for (int s = 0; s < d; ++s) {
        int ks = parts[static_cast<std::size_t>(s)];
        right -= ks;
        if (ks > 0) {
          std::vector<int> sub_parts = parts;
          sub_parts[static_cast<std::size_t>(s)]--;
          const std::vector<Cx>& sub = self(self, sub_parts);
          Cx coeff = std::sqrt(q_bracket(ks, Q.magnitude) / bracket_n) *
                     Q.power(0.5 * static_cast<double>(left - right));
          for (std::size_t i = 0; i < sub.size(); ++i) {
            if (sub[i] != Cx(0.0, 0.0))
              vec[i * static_cast<std::size_t>(d) + static_cast<std::size_t>(s)] +=
                  coeff * sub[i];
          }
        }
        left += ks;
      }
    }
    return memo.emplace(parts, std::move(vec)).first->second;
  };

  const std::vector<Cx>& top = build(build, k.parts());
  return StateVector{d, k.n(), top};
}

StateVector dicke_operator(const Composition& k, double q_mag) {
  check_constructible(k);
  if (!(q_mag > 0.0)) throw std::invalid_argument("dicke_operator: q must be > 0");
  const int d = k.d();
  const int n = k.n();

  int top = 0;  // highest level that is actually lowered into
  for (int i = 1; i < d; ++i)
    if (k[i] > 0) top = i;

  std::vector<SparseOperator> lowering;  // dressed X-_t, t = 1..top
  for (int t = 1; t <= top; ++t) lowering.push_back(coproduct_chevalley(d, n, t, Sign::minus, q_mag));

  std::vector<Cx> vec(dense_dim(d, n), Cx(0.0, 0.0));
  vec[0] = 1.0;
  for (int i = d - 1; i >= 1; --i) {
    for (int rep = 0; rep < k[i]; ++rep)
      for (int t = 1; t <= i; ++t) vec = lowering[static_cast<std::size_t>(t) - 1].apply(vec);
  }

  double scale = std::exp(-0.5 * q_multinomial_log(k, q_mag));
  for (int i = 1; i < d; ++i)
    for (int j = 2; j <= k[i]; ++j) scale /= q_bracket(j, q_mag);
  for (Cx& a : vec) a *= scale;
  return StateVector{d, n, std::move(vec)};
}

StateVector dual_transform(const StateVector& state) {
  StateVector out{state.d, state.n, std::vector<Cx>(state.dim(), Cx(0.0, 0.0))};
  for (std::size_t idx = 0; idx < state.dim(); ++idx) {
    if (state.amplitudes[idx] == Cx(0.0, 0.0)) continue;
    Word w = index_to_word(idx, state.d, state.n);
    for (int& l : w.letters) l = state.d - 1 - l;
    out.amplitudes[word_to_index(w, state.d)] = state.amplitudes[idx];
  }
  return out;
}

Cx inner_product(const StateVector& a, const StateVector& b) {
  if (a.d != b.d || a.n != b.n) throw std::invalid_argument("inner_product: shape mismatch");
  Cx sum(0.0, 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return sum;
}

std::string state_json(const StateVector& state, const Composition& k,
                       const DeformationParam& Q) {
  nlohmann::json doc;
  doc["d"] = state.d;
  doc["n"] = state.n;
  doc["k"] = k.parts();
  doc["q"] = Q.magnitude;
  doc["alpha"] = Q.phase;
  nlohmann::json amps = nlohmann::json::array();
  for (std::size_t idx = 0; idx < state.dim(); ++idx) {
    const Cx& a = state.amplitudes[idx];
    if (a == Cx(0.0, 0.0)) continue;
    amps.push_back({{"word", index_to_word(idx, state.d, state.n).str()},
                    {"re", a.real()},
                    {"im", a.imag()}});
  }
  doc["amplitudes"] = std::move(amps);
  return doc.dump(2) + "\n";
}

}  // namespace qdicke
