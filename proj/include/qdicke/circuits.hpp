#pragma once
// Preparation circuits for two-level deformed Dicke states: the recursive
// U_n construction from W_m layers of three-gate blocks, an input-specific
// pruned variant, a dense statevector simulator, and OpenQASM 3 export.
//
// Wire convention (this module only): letter i of an n-letter word, counted
// 1-based from the left, lives on qubit n-i, so qubit 0 carries the last
// letter. Bit b of a basis index is the value on qubit b, which makes the
// basis index of a word numerically equal to word_to_index(w, 2); simulator
// output therefore lines up with states-module vectors entry by entry.

#include <string>
#include <vector>

#include "qdicke/common.hpp"
#include "qdicke/qcomb.hpp"
#include "qdicke/states.hpp"

namespace qdicke {

struct GateParams {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
  friend bool operator==(const GateParams&, const GateParams&) = default;
};

enum class GateKind { x, cx, mcu };

struct Gate {
  GateKind kind = GateKind::x;
  std::vector<int> controls;  // strictly ascending; empty for x, one for cx
  int target = 0;
  GateParams params;  // mcu only, zeroed otherwise
  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;  // application order, front gate acts first
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

int wire_of_letter(int n, int i);

// Angles of the one-qubit rotation u(m,l):
//   theta = 2 arccos(sqrt([l]/[m]) q^{(m-l)/2}), phi = m*alpha/2 - pi,
//   lambda = -l*alpha/2 + pi, with brackets at |Q|. The arccos argument never
// exceeds 1: [l] q^{m-l} spreads into l of the m positive terms of [m].
GateParams u_angles(int m, int l, const DeformationParam& Q);

// Three-gate excitation-transfer block on qubits {0, l-1, l}: CX(0 -> l),
// then u(m,l) on qubit 0 controlled by qubit l (and qubit l-1 when l > 1),
// then CX(0 -> l) again. On a basis state with qubit 0 set it either moves
// the boundary excitation or acts as the identity.
std::vector<Gate> build_block_I(int m, int l, const DeformationParam& Q);

// One recursion layer on m qubits: blocks l = 1 .. m-1, l = 1 applied first.
Circuit build_W(int m, const DeformationParam& Q);

// Full preparation circuit: layer m = n applied first, each layer m acting
// on the top m wires (offset n-m). Maps the sorted word with any number of
// ones to the corresponding deformed Dicke state.
Circuit build_U(int n, const DeformationParam& Q);

// Input-specific circuit for the sorted word with l ones: layer m keeps only
// blocks j = max(l+m-n, 1) .. min(l, m-1). Agrees with build_U on that input.
Circuit build_pruned_U(int n, int l, const DeformationParam& Q);

// Block count of build_pruned_U(n, l); symmetric under l -> n-l.
long long gate_count(int n, int l);

// Dense statevector simulation from the basis state of a binary word.
StateVector simulate(const Circuit& c, const Word& input);

// OpenQASM 3 text, deterministic byte-for-byte; angles at 17 significant
// digits, controls listed ascending before the target.
std::string export_qasm(const Circuit& c);

// Parses exactly the subset of OpenQASM 3 that export_qasm emits.
Circuit parse_qasm(const std::string& text);

struct FidelityReport {
  int n = 0;
  int l = 0;
  double q = 1.0;
  double alpha = 0.0;
  double fidelity_full = 0.0;
  double fidelity_pruned = 0.0;
  long long gates_full = 0;   // controlled-rotation block count
  long long gates_pruned = 0;
};

// Simulates both the full and pruned circuits on the sorted input word and
// scores them against the closed-form state.
FidelityReport prepare_and_verify(int n, int l, const DeformationParam& Q);

std::string report_json(const FidelityReport& r);

}  // namespace qdicke
