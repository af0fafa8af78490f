#include "kcf/pencil.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "kcf/error.hpp"

namespace kcf {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
  RationalMatrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (sgn(x(i, k)) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) += x(i, k) * y(k, j);
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y) {
  RationalMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.data_.size(); ++i) out.data_[i] = x.data_[i] + y.data_[i];
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& x) {
  RationalMatrix out = x;
  for (auto& v : out.data_) v *= s;
  return out;
}

EigenvalueAssignment default_assignment(const KroneckerStructure& k) {
  EigenvalueAssignment out;
  for (auto mu : k.eigenvalues()) {
    if (!mu.is_infinity()) out.emplace(mu, Rational(static_cast<long>(mu.id())));
  }
  return out;
}

RationalPencil realize(const KroneckerStructure& k, const EigenvalueAssignment& assignment) {
  std::set<Rational> values;
  for (auto mu : k.eigenvalues()) {
    if (mu.is_infinity()) continue;
    const auto it = assignment.find(mu);
    if (it == assignment.end()) {
      throw Error(Errc::missing_label, "no value assigned to eigenvalue " + mu.to_string());
    }
    if (!values.insert(it->second).second) {
      throw Error(Errc::non_injective_assignment,
                  "distinct eigenvalues must receive distinct values");
    }
  }

  const auto [m, n] = size_of(k);
  RationalPencil p{RationalMatrix(m, n), RationalMatrix(m, n)};
  std::size_t row = 0;
  std::size_t col = 0;
  for (const auto& block : k.jordan()) {
    const auto s = static_cast<std::size_t>(block.size);
    const bool infinite = block.eigenvalue.is_infinity();
    auto& nilpotent = infinite ? p.b : p.a;
    auto& unit = infinite ? p.a : p.b;
    for (std::size_t i = 0; i < s; ++i) {
      unit(row + i, col + i) = 1;
      if (i + 1 < s) nilpotent(row + i, col + i + 1) = 1;
      if (!infinite) p.a(row + i, col + i) = -assignment.at(block.eigenvalue);
    }
    row += s;
    col += s;
  }
  for (int size : k.right()) {
    const auto s = static_cast<std::size_t>(size);
    for (std::size_t i = 0; i < s; ++i) {
      p.a(row + i, col + i + 1) = 1;
      p.b(row + i, col + i) = 1;
    }
    row += s;
    col += s + 1;
  }
  for (int size : k.left()) {
    const auto s = static_cast<std::size_t>(size);
    for (std::size_t i = 0; i < s; ++i) {
      p.a(row + i + 1, col + i) = 1;
      p.b(row + i, col + i) = 1;
    }
    row += s + 1;
    col += s;
  }
  return p;
}

namespace {

using IntegerRows = std::vector<std::vector<mpz_class>>;

IntegerRows clear_denominators(const RationalMatrix& m) {
  IntegerRows rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      rows[r][c] = m(r, c).get_num() * (scale / m(r, c).get_den());
    }
  }
  return rows;
}

// Fraction-free elimination in place; returns the rank. Every entry stays a
// minor of the input, so each division is exact. Row swaps negate `sign`.
std::int64_t bareiss(IntegerRows& rows, std::size_t cols, int& sign) {
  const std::size_t count = rows.size();
  mpz_class previous = 1;
  std::size_t rank = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && rank < count; ++c) {
    std::size_t pivot = rank;
    while (pivot < count && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == count) continue;
    if (pivot != rank) {
      std::swap(rows[pivot], rows[rank]);
      sign = -sign;
    }
    const mpz_class& head = rows[rank][c];
    for (std::size_t i = rank + 1; i < count; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = head * rows[i][j] - rows[i][c] * rows[rank][j];
        mpz_divexact(rows[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      rows[i][c] = 0;
    }
    previous = head;
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

}  // namespace

std::int64_t exact_rank(const RationalMatrix& m) {
  auto rows = clear_denominators(m);
  int sign = 1;
  return bareiss(rows, m.cols(), sign);
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::size_mismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  mpz_class scale = 1;
  auto rows = clear_denominators(m);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class row_scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(row_scale.get_mpz_t(), row_scale.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    scale *= row_scale;
  }
  int sign = 1;
  if (bareiss(rows, m.cols(), sign) < static_cast<std::int64_t>(m.rows())) return 0;
  Rational det(rows.back().back() * sign, scale);
  det.canonicalize();
  return det;
}

RationalMatrix tangent_matrix(const RationalPencil& p) {
  const std::size_t m = p.rows();
  const std::size_t n = p.cols();
  RationalMatrix t(2 * m * n, m * m + n * n);
  auto x_var = [&](std::size_t i, std::size_t k) { return i * m + k; };
  auto y_var = [&](std::size_t k, std::size_t j) { return m * m + k * n + j; };
  for (std::size_t half = 0; half < 2; ++half) {
    const auto& coeff = half == 0 ? p.a : p.b;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t eq = half * m * n + i * n + j;
        // (X C)_{ij} = sum_k X_{ik} C_{kj}
        for (std::size_t k = 0; k < m; ++k) t(eq, x_var(i, k)) += coeff(k, j);
        // (C Y)_{ij} = sum_k C_{ik} Y_{kj}
        for (std::size_t k = 0; k < n; ++k) t(eq, y_var(k, j)) += coeff(i, k);
      }
    }
  }
  return t;
}

std::int64_t tangent_codimension(const RationalPencil& p) {
  const auto ambient = static_cast<std::int64_t>(2 * p.rows() * p.cols());
  return ambient - exact_rank(tangent_matrix(p));
}

std::int64_t normal_rank(const RationalPencil& p) {
  const auto samples = static_cast<long>(std::min(p.rows(), p.cols())) + 1;
  std::int64_t best = 0;
  for (long t = 0; t < samples; ++t) best = std::max(best, exact_rank(p.at(Rational(t))));
  return best;
}

namespace {

// Raw 64-bit draws reduced by modulo: std distributions are not specified
// bit-for-bit across standard libraries.
class OperationSource {
 public:
  explicit OperationSource(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }

 private:
  std::mt19937_64 engine_;
};

// Applies `count` random invertible elementary operations to the rows of
// both matrices (or to their columns when `columns`).
void scramble(RationalPencil& p, bool columns, int count, OperationSource& source) {
  const std::size_t dim = columns ? p.cols() : p.rows();
  if (dim == 0) return;
  auto entry = [columns](RationalMatrix& mat, std::size_t line, std::size_t pos) -> Rational& {
    return columns ? mat(pos, line) : mat(line, pos);
  };
  const std::size_t length = columns ? p.rows() : p.cols();
  for (int op = 0; op < count; ++op) {
    const std::size_t kind = dim > 1 ? source.below(3) : 2;
    const std::size_t target = source.below(dim);
    if (kind == 0) {
      // line[target] += c * line[other], c in {-3..3} \ {0}
      std::size_t other = source.below(dim - 1);
      if (other >= target) ++other;
      long c = static_cast<long>(source.below(6)) - 3;
      if (c >= 0) ++c;
      for (RationalMatrix* mat : {&p.a, &p.b}) {
        for (std::size_t pos = 0; pos < length; ++pos) {
          entry(*mat, target, pos) += Rational(c) * entry(*mat, other, pos);
        }
      }
    } else if (kind == 1) {
      std::size_t other = source.below(dim - 1);
      if (other >= target) ++other;
      for (RationalMatrix* mat : {&p.a, &p.b}) {
        for (std::size_t pos = 0; pos < length; ++pos) {
          std::swap(entry(*mat, target, pos), entry(*mat, other, pos));
        }
      }
    } else {
      const long factor = source.below(2) == 0 ? -1 : 2;
      for (RationalMatrix* mat : {&p.a, &p.b}) {
        for (std::size_t pos = 0; pos < length; ++pos) entry(*mat, target, pos) *= factor;
      }
    }
  }
}

}  // namespace

RationalPencil random_equivalence(const RationalPencil& p, std::uint64_t seed, int operations) {
  RationalPencil out = p;
  OperationSource source(seed);
  const int row_ops = operations < 0 ? 3 * static_cast<int>(p.rows()) : operations;
  const int col_ops = operations < 0 ? 3 * static_cast<int>(p.cols()) : operations;
  scramble(out, false, row_ops, source);
  scramble(out, true, col_ops, source);
  return out;
}

}  // namespace kcf
