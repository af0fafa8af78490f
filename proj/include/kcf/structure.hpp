#pragma once

// Kronecker canonical structures and their eigenstructure invariants.
//
// A structure is the multiset of blocks of a Kronecker canonical form:
// Jordan blocks J_k(mu) (k >= 1), right singular blocks L_k (k x (k+1),
// k >= 0) and left singular blocks L_k^T ((k+1) x k, k >= 0). Eigenvalues
// are opaque labels; only their coincidence pattern matters for everything
// computed here.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace kcf {

class EigenvalueLabel {
 public:
  enum class Kind : std::uint8_t { finite, infinity };

  constexpr EigenvalueLabel() = default;

  static constexpr EigenvalueLabel finite(std::uint32_t id) {
    return EigenvalueLabel(Kind::finite, id);
  }
  static constexpr EigenvalueLabel infinity() {
    return EigenvalueLabel(Kind::infinity, 0);
  }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr std::uint32_t id() const noexcept { return id_; }
  constexpr bool is_infinity() const noexcept { return kind_ == Kind::infinity; }

  // Finite labels order by id; infinity sorts after every finite label.
  constexpr auto operator<=>(const EigenvalueLabel&) const = default;

  // "e<id>" or "inf".
  std::string to_string() const;

 private:
  constexpr EigenvalueLabel(Kind kind, std::uint32_t id) : kind_(kind), id_(id) {}

  Kind kind_ = Kind::finite;
  std::uint32_t id_ = 0;
};

struct JordanBlock {
  EigenvalueLabel eigenvalue;
  int size = 1;

  auto operator<=>(const JordanBlock&) const = default;
};

// Non-increasing list of non-negative integers, implicitly extended by zeros.
// Trailing zeros are trimmed on construction.
class IntSequence {
 public:
  IntSequence() = default;
  explicit IntSequence(std::vector<std::int64_t> values);
  IntSequence(std::initializer_list<std::int64_t> values)
      : IntSequence(std::vector<std::int64_t>(values)) {}

  // i-th entry of the zero-extended sequence.
  std::int64_t operator[](std::size_t i) const noexcept {
    return i < values_.size() ? values_[i] : 0;
  }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::int64_t sum() const noexcept;

  // Weyr characteristic of a list of sizes: entry i counts sizes >= first_index + i.
  static IntSequence weyr(std::span<const int> sizes, int first_index);

  std::string to_string() const;

  friend bool operator==(const IntSequence&, const IntSequence&) = default;

 private:
  std::vector<std::int64_t> values_;
};

enum class Side : std::uint8_t { right, left };

class KroneckerStructure {
 public:
  KroneckerStructure() = default;

  // Throws Errc::domain_error on Jordan size < 1 or singular size < 0.
  KroneckerStructure(std::vector<JordanBlock> jordan, std::vector<int> right,
                     std::vector<int> left);

  // Sorted by (eigenvalue, size descending).
  const std::vector<JordanBlock>& jordan() const noexcept { return jordan_; }
  // Sorted descending.
  const std::vector<int>& right() const noexcept { return right_; }
  const std::vector<int>& left() const noexcept { return left_; }
  const std::vector<int>& singular(Side side) const noexcept {
    return side == Side::right ? right_ : left_;
  }

  bool empty() const noexcept {
    return jordan_.empty() && right_.empty() && left_.empty();
  }

  // Distinct eigenvalues present, ascending.
  std::vector<EigenvalueLabel> eigenvalues() const;
  bool has_eigenvalue(EigenvalueLabel mu) const;

  // Segre characteristic at mu: Jordan sizes, descending.
  std::vector<int> segre(EigenvalueLabel mu) const;

  friend auto operator<=>(const KroneckerStructure&,
                          const KroneckerStructure&) = default;
  friend bool operator==(const KroneckerStructure&,
                         const KroneckerStructure&) = default;

 private:
  std::vector<JordanBlock> jordan_;
  std::vector<int> right_;
  std::vector<int> left_;
};

struct Dimensions {
  std::int64_t rows = 0;
  std::int64_t cols = 0;

  friend bool operator==(const Dimensions&, const Dimensions&) = default;
};

Dimensions size_of(const KroneckerStructure& k);

// Normal rank: n - r_0 = m - l_0.
std::int64_t rank_of(const KroneckerStructure& k);

// (W_1(mu), W_2(mu), ...); empty when mu is not an eigenvalue.
IntSequence weyr_jordan(const KroneckerStructure& k, EigenvalueLabel mu);

// (r_0, r_1, ...) or (l_0, l_1, ...); index 0 counts every block of that side.
IntSequence weyr_singular(const KroneckerStructure& k, Side side);

// Orbit codimension in the 2mn-dimensional pencil space, from Weyr data:
//   l_0 n + r_0 m - sum r_i r_{i+1} - sum l_i l_{i+1} + sum_mu sum_i W_i(mu)^2
std::int64_t codimension(const KroneckerStructure& k);

std::int64_t orbit_dimension(const KroneckerStructure& k);

// The renaming used by canonicalize_relative: free label -> canonical label.
std::map<EigenvalueLabel, EigenvalueLabel> canonical_renaming(
    const KroneckerStructure& k, std::span<const EigenvalueLabel> pinned);

// Renames finite eigenvalues not in `pinned` so that label-isomorphic
// structures coincide. Free labels are ordered by Segre characteristic
// (greater sequence first) and take ids max_pinned_id + 1, +2, ...
// Infinity is never renamed. Idempotent for a fixed pinned set.
KroneckerStructure canonicalize_relative(const KroneckerStructure& k,
                                         std::span<const EigenvalueLabel> pinned);

// Canonical representative modulo relabeling of finite eigenvalues:
// finite labels become e1, e2, ... in Segre order.
KroneckerStructure canonicalize(const KroneckerStructure& k);

// Applies an injective relabeling; labels absent from `from` are kept.
KroneckerStructure relabel(const KroneckerStructure& k,
                           std::span<const EigenvalueLabel> from,
                           std::span<const EigenvalueLabel> to);

}  // namespace kcf
