#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qdicke/qcomb.hpp"
#include "qdicke/states.hpp"

namespace qdicke {

// A bipartition cut of content k at block length l: a composition a with
// 0 <= a_i <= k_i and sum a_i = l.
using Cut = Composition;

struct EntropyCurve {
  Composition k;
  double q_mag;
  std::vector<std::pair<int, double>> rows;  // (l, S) for l = 1..n-1
};

// All cuts of k at length l, exactly once, ascending lexicographic.
std::vector<Cut> enumerate_cuts(const Composition& k, int l);

// Reduced-density eigenvalue for the cut a: q^E times the ratio of
// multinomials [l; a][n-l; k-a]/[n; k], E = sum_{i<j} (a_i k_j - a_j k_i).
// Computed in log domain; strictly positive.
double schmidt_coefficient(const Composition& k, const Cut& a, int l, double q_mag);

// Reassembles sum_a sqrt(lambda) |D^l(a)> x |D^(n-l)(k-a)>, with the phase of
// the complex prefactor Q^(E/2) restored; equals dicke_sum(k, Q).
StateVector schmidt_reconstruct(const Composition& k, const DeformationParam& Q, int l);

// -sum_a lambda log_d lambda, with 0 log 0 = 0.  Complex deformations enter
// through their magnitude only.
double entanglement_entropy(const Composition& k, double q_mag, int l);

// Independent oracle: reshapes the state across the cut, diagonalizes the
// Gram matrix by cyclic Jacobi rotations, and sums -lambda log_d lambda over
// eigenvalues above 1e-14.
double entropy_bruteforce(const StateVector& state, int l);

// Exact polynomial check of sum_a q^E [l; a][n-l; k-a] == [n; k].
bool verify_q_vandermonde(const Composition& k, int l);

// S(l) for l = 1..n-1, entirely in log domain (no statevector built).
EntropyCurve entropy_curve(const Composition& k, double q_mag);

// CSV text: header "l,S", one row per l, S with 12 significant digits.
std::string entropy_csv(const EntropyCurve& curve);

// Canonical file name {d}_{n}_{k-joined}_{q}.csv, parts joined with "-".
std::string entropy_csv_filename(const EntropyCurve& curve);

}  // namespace qdicke
