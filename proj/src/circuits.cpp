#include "qdicke/circuits.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <stdexcept>
#include <string>

namespace qdicke {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_block(int m, int l) {
  if (m < 2) throw std::invalid_argument("block needs at least 2 qubits");
  if (l < 1 || l > m - 1) throw std::out_of_range("block index l outside 1..m-1");
}

// Column-major-free 2x2: {u00, u01, u10, u11}.
std::array<Cx, 4> u_matrix(const GateParams& p) {
  const double c = std::cos(0.5 * p.theta);
  const double s = std::sin(0.5 * p.theta);
  return {Cx(c, 0.0), -std::polar(s, p.lambda), std::polar(s, p.phi),
          std::polar(c, p.phi + p.lambda)};
}

void append_with_offset(Circuit& c, const std::vector<Gate>& gates, int offset) {
  for (Gate g : gates) {
    g.target += offset;
    for (int& q : g.controls) q += offset;
    c.gates.push_back(std::move(g));
  }
}

void check_gates(const Circuit& c) {
  for (const Gate& g : c.gates) {
    if (g.target < 0 || g.target >= c.n_qubits)
      throw std::invalid_argument("gate target outside the register");
    if (!std::is_sorted(g.controls.begin(), g.controls.end()) ||
        std::adjacent_find(g.controls.begin(), g.controls.end()) != g.controls.end())
      throw std::invalid_argument("gate controls must be strictly ascending");
    for (int q : g.controls)
      if (q < 0 || q >= c.n_qubits || q == g.target)
        throw std::invalid_argument("gate control collides with target or register edge");
    const std::size_t nc = g.controls.size();
    if ((g.kind == GateKind::x && nc != 0) || (g.kind == GateKind::cx && nc != 1) ||
        (g.kind == GateKind::mcu && nc != 1 && nc != 2))
      throw std::invalid_argument("gate arity does not match its kind");
  }
}

std::string format_angle(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

long long count_blocks(const Circuit& c) {
  long long n = 0;
  for (const Gate& g : c.gates)
    if (g.kind == GateKind::mcu) ++n;
  return n;
}

}  // namespace

int wire_of_letter(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("letter position outside 1..n");
  return n - i;
}

GateParams u_angles(int m, int l, const DeformationParam& Q) {
  check_block(m, l);
  const double q = Q.magnitude;
  const double arg =
      std::sqrt(q_bracket(l, q) / q_bracket(m, q)) * std::pow(q, 0.5 * (m - l));
  GateParams p;
  p.theta = 2.0 * std::acos(std::min(arg, 1.0));
  p.phi = 0.5 * m * Q.phase - kPi;
  p.lambda = -0.5 * l * Q.phase + kPi;
  return p;
}

std::vector<Gate> build_block_I(int m, int l, const DeformationParam& Q) {
  check_block(m, l);
  const GateParams p = u_angles(m, l, Q);
  const Gate flip{GateKind::cx, {0}, l, {}};
  Gate rot{GateKind::mcu, {l}, 0, p};
  if (l > 1) rot.controls = {l - 1, l};
  return {flip, rot, flip};
}

Circuit build_W(int m, const DeformationParam& Q) {
  if (m < 2) throw std::invalid_argument("layer needs at least 2 qubits");
  Circuit c{m, {}};
  for (int l = 1; l <= m - 1; ++l) append_with_offset(c, build_block_I(m, l, Q), 0);
  return c;
}

Circuit build_U(int n, const DeformationParam& Q) {
  if (n < 2) throw std::invalid_argument("circuit needs at least 2 qubits");
  Circuit c{n, {}};
  for (int m = n; m >= 2; --m)
    for (int l = 1; l <= m - 1; ++l) append_with_offset(c, build_block_I(m, l, Q), n - m);
  return c;
}

Circuit build_pruned_U(int n, int l, const DeformationParam& Q) {
  if (n < 2) throw std::invalid_argument("circuit needs at least 2 qubits");
  if (l < 1 || l > n - 1) throw std::out_of_range("excitation count outside 1..n-1");
  Circuit c{n, {}};
  for (int m = n; m >= 2; --m) {
    const int jlo = std::max(l + m - n, 1);
    const int jhi = std::min(l, m - 1);
    for (int j = jlo; j <= jhi; ++j) append_with_offset(c, build_block_I(m, j, Q), n - m);
  }
  return c;
}

long long gate_count(int n, int l) {
  if (n < 2) throw std::invalid_argument("circuit needs at least 2 qubits");
  if (l < 1 || l > n - 1) throw std::out_of_range("excitation count outside 1..n-1");
  long long total = 0;
  for (int m = 2; m <= n; ++m)
    total += 1 + std::min(l, m - 1) - std::max(l + m - n, 1);
  return total;
}

StateVector simulate(const Circuit& c, const Word& input) {
  if (static_cast<int>(input.size()) != c.n_qubits)
    throw std::invalid_argument("input word length does not match the register");
  for (int w : input.letters)
    if (w != 0 && w != 1) throw std::invalid_argument("simulator input must be binary");
  check_gates(c);

  const std::size_t dim = dense_dim(2, c.n_qubits);
  StateVector state{2, c.n_qubits, std::vector<Cx>(dim, Cx(0.0, 0.0))};
  state.amplitudes[word_to_index(input, 2)] = Cx(1.0, 0.0);

  for (const Gate& g : c.gates) {
    const std::size_t tbit = std::size_t{1} << g.target;
    std::size_t cmask = 0;
    for (int q : g.controls) cmask |= std::size_t{1} << q;
    std::array<Cx, 4> u{};
    if (g.kind == GateKind::mcu) u = u_matrix(g.params);
    for (std::size_t i = 0; i < dim; ++i) {
      if ((i & tbit) != 0 || (i & cmask) != cmask) continue;
      const std::size_t j = i | tbit;
      Cx& a0 = state.amplitudes[i];
      Cx& a1 = state.amplitudes[j];
      if (g.kind == GateKind::mcu) {
        const Cx b0 = u[0] * a0 + u[1] * a1;
        const Cx b1 = u[2] * a0 + u[3] * a1;
        a0 = b0;
        a1 = b1;
      } else {
        std::swap(a0, a1);
      }
    }
  }
  return state;
}

std::string export_qasm(const Circuit& c) {
  check_gates(c);
  std::string out = "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n";
  out += "qubit[" + std::to_string(c.n_qubits) + "] q;\n";
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::x:
        out += "x q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::cx:
        out += "cx q[" + std::to_string(g.controls[0]) + "], q[" +
               std::to_string(g.target) + "];\n";
        break;
      case GateKind::mcu: {
        std::string line;
        for (std::size_t i = 0; i < g.controls.size(); ++i) line += "ctrl @ ";
        line += "U(" + format_angle(g.params.theta) + ", " + format_angle(g.params.phi) +
                ", " + format_angle(g.params.lambda) + ")";
        for (int q : g.controls) line += " q[" + std::to_string(q) + "],";
        line += " q[" + std::to_string(g.target) + "];";
        out += line + "\n";
        break;
      }
    }
  }
  return out;
}

Circuit parse_qasm(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    if (end > start) lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.size() < 3 || lines[0] != "OPENQASM 3.0;" ||
      lines[1] != "include \"stdgates.inc\";")
    throw std::invalid_argument("unrecognized header");

  Circuit c;
  int consumed = 0;
  if (std::sscanf(lines[2].c_str(), "qubit[%d] q;%n", &c.n_qubits, &consumed) != 1 ||
      consumed != static_cast<int>(lines[2].size()))
    throw std::invalid_argument("unrecognized register declaration");

  for (std::size_t ln = 3; ln < lines.size(); ++ln) {
    const char* s = lines[ln].c_str();
    const int len = static_cast<int>(lines[ln].size());
    Gate g;
    int a = 0, b = 0, t = 0;
    consumed = 0;
    if (std::sscanf(s, "x q[%d];%n", &t, &consumed) == 1 && consumed == len) {
      g = Gate{GateKind::x, {}, t, {}};
    } else if (std::sscanf(s, "cx q[%d], q[%d];%n", &a, &t, &consumed) == 2 &&
               consumed == len) {
      g = Gate{GateKind::cx, {a}, t, {}};
    } else if (GateParams p;
               std::sscanf(s, "ctrl @ ctrl @ U(%lf, %lf, %lf) q[%d], q[%d], q[%d];%n",
                           &p.theta, &p.phi, &p.lambda, &a, &b, &t, &consumed) == 6 &&
               consumed == len) {
      g = Gate{GateKind::mcu, {a, b}, t, p};
    } else if (GateParams p;
               std::sscanf(s, "ctrl @ U(%lf, %lf, %lf) q[%d], q[%d];%n", &p.theta,
                           &p.phi, &p.lambda, &a, &t, &consumed) == 5 &&
               consumed == len) {
      g = Gate{GateKind::mcu, {a}, t, p};
    } else {
      throw std::invalid_argument("unrecognized statement: " + lines[ln]);
    }
    c.gates.push_back(std::move(g));
  }
  check_gates(c);
  return c;
}

FidelityReport prepare_and_verify(int n, int l, const DeformationParam& Q) {
  const Circuit full = build_U(n, Q);
  const Circuit pruned = build_pruned_U(n, l, Q);
  const Word input = identity_word(Composition({n - l, l}));
  const StateVector target = dicke_sum(Composition({n - l, l}), Q);

  FidelityReport r;
  r.n = n;
  r.l = l;
  r.q = Q.magnitude;
  r.alpha = Q.phase;
  r.fidelity_full = std::norm(inner_product(target, simulate(full, input)));
  r.fidelity_pruned = std::norm(inner_product(target, simulate(pruned, input)));
  r.gates_full = count_blocks(full);
  r.gates_pruned = count_blocks(pruned);
  return r;
}

std::string report_json(const FidelityReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["l"] = r.l;
  j["q"] = r.q;
  j["alpha"] = r.alpha;
  j["fidelity_full"] = r.fidelity_full;
  j["fidelity_pruned"] = r.fidelity_pruned;
  j["gates_full"] = r.gates_full;
  j["gates_pruned"] = r.gates_pruned;
  return j.dump(2) + "\n";
}

}  // namespace qdicke
