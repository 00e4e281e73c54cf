#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qdicke/common.hpp"

namespace qdicke {

enum class Sign { plus, minus };

// Sparse complex operator on (C^d)^{tensor n}.  Entries are keyed by
// row * dim + col; exact zeros are never stored.  Basis index convention
// matches statevectors: the leftmost site is the most significant digit.
class SparseOperator {
 public:
  SparseOperator(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  std::size_t dim() const { return dim_; }
  const std::map<std::uint64_t, Cx>& entries() const { return entries_; }

  Cx at(std::size_t row, std::size_t col) const;
  void add(std::size_t row, std::size_t col, Cx v);

  SparseOperator operator+(const SparseOperator& rhs) const;
  SparseOperator operator-(const SparseOperator& rhs) const;
  SparseOperator operator*(const SparseOperator& rhs) const;  // matrix product
  SparseOperator scaled(Cx factor) const;
  SparseOperator adjoint() const;

  std::vector<Cx> apply(const std::vector<Cx>& vec) const;
  double max_abs() const;

  static SparseOperator identity(int d, int n);
  static SparseOperator kron(const SparseOperator& a, const SparseOperator& b);

 private:
  int d_;
  int n_;
  std::size_t dim_;
  std::map<std::uint64_t, Cx> entries_;
};

// a b - b a.
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);

// Single-site Cartan generator: +1 on level i-1, -1 on level i (levels are
// 0-indexed, generator labels run 1..d-1).
SparseOperator site_cartan(int d, int i);

// Single-site raising (level i -> i-1) or lowering (level i-1 -> i) generator.
SparseOperator site_chevalley(int d, int i, Sign sign);

// diag(q^(h/2)) for h = site_cartan(d, i); sign -1 gives diag(q^(-h/2)).
SparseOperator site_cartan_half_power(int d, int i, double q_mag, int sign);

// Sum of the single-site Cartan generator over all n positions.
SparseOperator coproduct_cartan(int d, int n, int i);

// Dressed n-site ladder generator: position j carries the single-site ladder
// matrix, every site left of j carries q^(h/2) and every site right of j
// carries q^(-h/2), summed over j.
SparseOperator coproduct_chevalley(int d, int n, int i, Sign sign, double q_mag);

// Nested commutator [X-_j, ... [X-_2, X-_1] ...] of dressed lowering
// generators; j = 1 is plain X-_1.  On one qudit it lowers |0> to |j>.
SparseOperator nested_lowering(int d, int n, int j, double q_mag);

// Ordered product X-_i X-_{i-1} ... X-_1 of dressed lowering generators.
// On one qudit it maps |j> to delta_{0j} |i>.
SparseOperator ordered_lowering(int d, int n, int i, double q_mag);

// C^(tensor n) with single-site action |j> -> |d-1-j>.
SparseOperator charge_conjugation(int d, int n);

// [h] applied entrywise on the diagonal; h must be diagonal.
SparseOperator diagonal_bracket(const SparseOperator& h, double q_mag);

// Residuals of the two defining commutator relations, maximized over all
// generator pairs:
//   hx: [H_i, X(s)_j] -/+ (2 d_ij - d_{i-1,j} - d_{i+1,j}) X(s)_j
//   xx: [X+_i, X-_j] - d_ij [H_i]
struct CommutationReport {
  double hx_violation = 0.0;
  double xx_violation = 0.0;
  double tol = 0.0;
  bool pass = false;
};

CommutationReport verify_commutation(int d, int n, double q_mag, double tol);

}  // namespace qdicke
