#pragma once

#include <string>
#include <vector>

#include "qdicke/common.hpp"
#include "qdicke/qcomb.hpp"

namespace qdicke {

// Dense state on (C^d)^{tensor n}.  Word w = w_1...w_n maps to index
// sum_i w_i d^(n-i): the leftmost letter is the most significant digit.
struct StateVector {
  int d = 0;
  int n = 0;
  std::vector<Cx> amplitudes;

  std::size_t dim() const { return amplitudes.size(); }
  double norm() const;
};

std::size_t word_to_index(const Word& w, int d);
Word index_to_word(std::size_t idx, int d, int n);

// Amplitude of |w> in |D(k)> at deformation Q: Q^(J/2 - inv(w)) divided by
// the square root of the multinomial at |Q|.  Throws std::domain_error if w
// is not a rearrangement of the content k.
Cx amplitude(const Composition& k, const DeformationParam& Q, const Word& w);

// Closed-form construction: sum of amplitude(k, Q, w)|w> over all words of
// content k.
StateVector dicke_sum(const Composition& k, const DeformationParam& Q);

// d-branch recursion peeling off the last letter, memoized on the
// sub-composition lattice; branches with k_s = 0 are skipped.
StateVector dicke_recursive(const Composition& k, const DeformationParam& Q);

// Operator formula: ordered lowering products applied to |0...0>, then
// normalized.  Defined for real q > 0 only; serves as the cross-check oracle
// for the other two constructors.
StateVector dicke_operator(const Composition& k, double q_mag);

// Site-wise relabeling j -> d-1-j; an exact involution.
StateVector dual_transform(const StateVector& state);

// Conjugate-linear in the first argument.
Cx inner_product(const StateVector& a, const StateVector& b);

// JSON text with fields d, n, k, q, alpha and one {word, re, im} entry per
// nonzero amplitude, in ascending word order.
std::string state_json(const StateVector& state, const Composition& k,
                       const DeformationParam& Q);

}  // namespace qdicke
