#pragma once

// Executable forms of the two integer-list inequalities behind the
// codimension monotonicity argument. Both sides are returned so that tests
// can assert the inequality and the equality characterization separately.
//
// Inputs are plain integer lists of a fixed length k: zero entries are
// significant here, so IntSequence (which trims them) is not used.

#include <cstdint>
#include <span>
#include <vector>

namespace kcf {

struct WeightedSumResult {
  std::int64_t sum = 0;  // d_1 delta_1 + ... + d_k delta_k
  // sum > 0, or for every j: d_1 + ... + d_j = 0 or delta_j = delta_{j+1}
  // (delta_{k+1} = 0).
  bool equality_condition_ok = false;
};

// Preconditions (Errc::precondition_violated): equal lengths k >= 1;
// (a) delta non-increasing and non-negative; (b) every prefix sum of d >= 0.
WeightedSumResult weighted_sum_bound(std::span<const std::int64_t> d,
                                 std::span<const std::int64_t> delta);

struct SidePair {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct SquareProductResult {
  SidePair squares;   // sum alpha_i^2 vs sum beta_i^2
  SidePair products;  // p alpha_1 + sum alpha_i alpha_{i+1} vs same for beta
  // For both inequalities: equality holds exactly when alpha == beta.
  bool equality_iff_equal_ok = false;
};

// Preconditions (Errc::precondition_violated): equal lengths k >= 1;
// (i) 0 <= entries <= p and both non-increasing; (ii) prefix sums of alpha
// bounded by prefix sums of beta.
SquareProductResult square_product_bounds(std::int64_t p, std::span<const std::int64_t> alpha,
                                   std::span<const std::int64_t> beta);

}  // namespace kcf
