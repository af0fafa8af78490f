#include "kcf/lemmas.hpp"

#include <algorithm>
#include <string>

#include "kcf/error.hpp"

namespace kcf {

namespace {

[[noreturn]] void violated(const std::string& which) {
  throw Error(Errc::precondition_violated, "precondition " + which + " violated");
}

bool non_increasing_within(std::span<const std::int64_t> v, std::int64_t top) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] > top) return false;
    if (i > 0 && v[i] > v[i - 1]) return false;
  }
  return true;
}

}  // namespace

WeightedSumResult weighted_sum_bound(std::span<const std::int64_t> d,
                                 std::span<const std::int64_t> delta) {
  if (d.empty() || d.size() != delta.size()) violated("(length)");
  const std::size_t k = d.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (delta[i] < 0 || (i > 0 && delta[i] > delta[i - 1])) violated("(a)");
  }
  std::int64_t prefix = 0;
  for (std::size_t i = 0; i < k; ++i) {
    prefix += d[i];
    if (prefix < 0) violated("(b)");
  }

  WeightedSumResult r;
  for (std::size_t i = 0; i < k; ++i) r.sum += d[i] * delta[i];
  if (r.sum > 0) {
    r.equality_condition_ok = true;
    return r;
  }
  r.equality_condition_ok = true;
  prefix = 0;
  for (std::size_t j = 0; j < k; ++j) {
    prefix += d[j];
    const std::int64_t after = j + 1 < k ? delta[j + 1] : 0;
    if (prefix != 0 && delta[j] != after) r.equality_condition_ok = false;
  }
  return r;
}

SquareProductResult square_product_bounds(std::int64_t p, std::span<const std::int64_t> alpha,
                                   std::span<const std::int64_t> beta) {
  if (alpha.empty() || alpha.size() != beta.size()) violated("(length)");
  if (p < 0 || !non_increasing_within(alpha, p) || !non_increasing_within(beta, p)) {
    violated("(i)");
  }
  const std::size_t k = alpha.size();
  std::int64_t sa = 0;
  std::int64_t sb = 0;
  for (std::size_t j = 0; j < k; ++j) {
    sa += alpha[j];
    sb += beta[j];
    if (sa > sb) violated("(ii)");
  }

  SquareProductResult r;
  r.products.lhs = p * alpha[0];
  r.products.rhs = p * beta[0];
  for (std::size_t i = 0; i < k; ++i) {
    r.squares.lhs += alpha[i] * alpha[i];
    r.squares.rhs += beta[i] * beta[i];
    if (i + 1 < k) {
      r.products.lhs += alpha[i] * alpha[i + 1];
      r.products.rhs += beta[i] * beta[i + 1];
    }
  }
  const bool equal = std::equal(alpha.begin(), alpha.end(), beta.begin());
  r.equality_iff_equal_ok = (r.squares.lhs == r.squares.rhs) == equal &&
                            (r.products.lhs == r.products.rhs) == equal;
  return r;
}

}  // namespace kcf
