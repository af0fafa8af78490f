#pragma once

// Explicit pencils A + lambda B with exact rational entries, and the
// tangent-space oracle for orbit codimension.

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "kcf/structure.hpp"

namespace kcf {

// GMP keeps mpq_class values reduced with a positive denominator.
using Rational = mpq_class;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;

  friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
  friend RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& x);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RationalPencil {
  RationalMatrix a;
  RationalMatrix b;

  std::size_t rows() const noexcept { return a.rows(); }
  std::size_t cols() const noexcept { return a.cols(); }

  RationalMatrix at(const Rational& lambda) const { return a + lambda * b; }

  friend bool operator==(const RationalPencil&, const RationalPencil&) = default;
};

using EigenvalueAssignment = std::map<EigenvalueLabel, Rational>;

// e_i -> i for every finite eigenvalue of k.
EigenvalueAssignment default_assignment(const KroneckerStructure& k);

// Block-diagonal realization, blocks in the stored order of k (Jordan,
// right singular, left singular):
//   J_k(mu):  A = N_k - mu I_k, B = I_k   (N_k: ones on the superdiagonal)
//   J_k(inf): A = I_k,          B = N_k
//   L_k:      A = [0 | I_k],    B = [I_k | 0]      (k x (k+1))
//   L_k^T:    transposes of the L_k pair
// Throws Errc::missing_label and Errc::non_injective_assignment.
RationalPencil realize(const KroneckerStructure& k, const EigenvalueAssignment& assignment);

// Rank over Q by fraction-free elimination on a row-scaled integer copy.
std::int64_t exact_rank(const RationalMatrix& m);

// Determinant of a square matrix (fraction-free).
Rational determinant(const RationalMatrix& m);

// Coefficient matrix (2mn x (m^2 + n^2)) of (X, Y) -> (XA + AY, XB + BY).
// Columns: X row-major, then Y row-major. Rows: XA + AY row-major, then
// XB + BY row-major.
RationalMatrix tangent_matrix(const RationalPencil& p);

// 2mn - rank of the tangent map.
std::int64_t tangent_codimension(const RationalPencil& p);

// Rank of A + lambda B over Q(lambda): the maximum of rank(A + tB) over
// min(m, n) + 1 distinct integers t, which cannot all be eigenvalues.
std::int64_t normal_rank(const RationalPencil& p);

// Q_left * P * Q_right where both factors are products of elementary
// integer row/column operations drawn from a seeded generator.
// `operations` per side defaults to 3 * dimension; 0 returns P unchanged.
RationalPencil random_equivalence(const RationalPencil& p, std::uint64_t seed,
                                  int operations = -1);

}  // namespace kcf
