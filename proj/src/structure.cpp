#include "kcf/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "kcf/error.hpp"

namespace kcf {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::domain_error: return "DomainError";
    case Errc::parse_error: return "ParseError";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::duplicate_node: return "DuplicateNode";
    case Errc::missing_blocks: return "MissingBlocks";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::pool_too_small: return "PoolTooSmall";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::non_injective_assignment: return "NonInjectiveAssignment";
    case Errc::missing_label: return "MissingLabel";
    case Errc::invalid_size: return "InvalidSize";
    case Errc::enumeration_limit_exceeded: return "EnumerationLimitExceeded";
    case Errc::search_budget_exceeded: return "SearchBudgetExceeded";
  }
  return "Unknown";
}

std::string EigenvalueLabel::to_string() const {
  return is_infinity() ? std::string("inf") : "e" + std::to_string(id_);
}

// --- IntSequence -------------------------------------------------------------

IntSequence::IntSequence(std::vector<std::int64_t> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || (i > 0 && values_[i] > values_[i - 1])) {
      throw Error(Errc::domain_error,
                  "IntSequence must be non-increasing and non-negative");
    }
  }
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

std::int64_t IntSequence::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

IntSequence IntSequence::weyr(std::span<const int> sizes, int first_index) {
  int largest = first_index - 1;
  for (int s : sizes) largest = std::max(largest, s);
  std::vector<std::int64_t> w;
  for (int i = first_index; i <= largest; ++i) {
    w.push_back(std::count_if(sizes.begin(), sizes.end(), [i](int s) { return s >= i; }));
  }
  return IntSequence(std::move(w));
}

std::string IntSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values_[i]);
  }
  return out + ")";
}

// --- KroneckerStructure ------------------------------------------------------

KroneckerStructure::KroneckerStructure(std::vector<JordanBlock> jordan,
                                       std::vector<int> right, std::vector<int> left)
    : jordan_(std::move(jordan)), right_(std::move(right)), left_(std::move(left)) {
  for (const auto& b : jordan_) {
    if (b.size < 1) throw Error(Errc::domain_error, "Jordan block size must be >= 1");
  }
  for (int s : right_) {
    if (s < 0) throw Error(Errc::domain_error, "right singular block size must be >= 0");
  }
  for (int s : left_) {
    if (s < 0) throw Error(Errc::domain_error, "left singular block size must be >= 0");
  }
  std::sort(jordan_.begin(), jordan_.end(), [](const JordanBlock& a, const JordanBlock& b) {
    if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
    return a.size > b.size;
  });
  std::sort(right_.begin(), right_.end(), std::greater<>());
  std::sort(left_.begin(), left_.end(), std::greater<>());
}

std::vector<EigenvalueLabel> KroneckerStructure::eigenvalues() const {
  std::vector<EigenvalueLabel> out;
  for (const auto& b : jordan_) {
    if (out.empty() || out.back() != b.eigenvalue) out.push_back(b.eigenvalue);
  }
  return out;
}

bool KroneckerStructure::has_eigenvalue(EigenvalueLabel mu) const {
  return std::any_of(jordan_.begin(), jordan_.end(),
                     [mu](const JordanBlock& b) { return b.eigenvalue == mu; });
}

std::vector<int> KroneckerStructure::segre(EigenvalueLabel mu) const {
  std::vector<int> out;
  for (const auto& b : jordan_) {
    if (b.eigenvalue == mu) out.push_back(b.size);
  }
  return out;
}

// --- invariants --------------------------------------------------------------

Dimensions size_of(const KroneckerStructure& k) {
  Dimensions d;
  for (const auto& b : k.jordan()) {
    d.rows += b.size;
    d.cols += b.size;
  }
  for (int s : k.right()) {
    d.rows += s;
    d.cols += s + 1;
  }
  for (int s : k.left()) {
    d.rows += s + 1;
    d.cols += s;
  }
  return d;
}

std::int64_t rank_of(const KroneckerStructure& k) {
  return size_of(k).cols - static_cast<std::int64_t>(k.right().size());
}

IntSequence weyr_jordan(const KroneckerStructure& k, EigenvalueLabel mu) {
  const auto sizes = k.segre(mu);
  return IntSequence::weyr(sizes, 1);
}

IntSequence weyr_singular(const KroneckerStructure& k, Side side) {
  return IntSequence::weyr(k.singular(side), 0);
}

namespace {

std::int64_t adjacent_products(const IntSequence& s) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) total += s[i] * s[i + 1];
  return total;
}

std::int64_t sum_of_squares(const IntSequence& s) {
  std::int64_t total = 0;
  for (auto v : s.values()) total += v * v;
  return total;
}

}  // namespace

std::int64_t codimension(const KroneckerStructure& k) {
  const auto [m, n] = size_of(k);
  const auto r = weyr_singular(k, Side::right);
  const auto l = weyr_singular(k, Side::left);
  std::int64_t codim = l[0] * n + r[0] * m - adjacent_products(r) - adjacent_products(l);
  for (const auto mu : k.eigenvalues()) codim += sum_of_squares(weyr_jordan(k, mu));
  return codim;
}

std::int64_t orbit_dimension(const KroneckerStructure& k) {
  const auto [m, n] = size_of(k);
  return 2 * m * n - codimension(k);
}

std::map<EigenvalueLabel, EigenvalueLabel> canonical_renaming(
    const KroneckerStructure& k, std::span<const EigenvalueLabel> pinned) {
  const std::set<EigenvalueLabel> fixed(pinned.begin(), pinned.end());
  std::uint32_t next_id = 1;
  for (const auto& label : fixed) {
    if (!label.is_infinity()) next_id = std::max(next_id, label.id() + 1);
  }

  std::vector<std::pair<std::vector<int>, EigenvalueLabel>> free_labels;
  for (const auto mu : k.eigenvalues()) {
    if (mu.is_infinity() || fixed.contains(mu)) continue;
    free_labels.emplace_back(k.segre(mu), mu);
  }
  // Ties have identical Segre data, so their relative order does not affect
  // the renamed structure.
  std::stable_sort(free_labels.begin(), free_labels.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  std::map<EigenvalueLabel, EigenvalueLabel> rename;
  for (const auto& [segre, mu] : free_labels) {
    rename.emplace(mu, EigenvalueLabel::finite(next_id++));
  }
  return rename;
}

KroneckerStructure canonicalize_relative(const KroneckerStructure& k,
                                         std::span<const EigenvalueLabel> pinned) {
  const auto rename = canonical_renaming(k, pinned);
  std::vector<JordanBlock> jordan;
  jordan.reserve(k.jordan().size());
  for (const auto& b : k.jordan()) {
    const auto it = rename.find(b.eigenvalue);
    jordan.push_back({it == rename.end() ? b.eigenvalue : it->second, b.size});
  }
  return KroneckerStructure(std::move(jordan), k.right(), k.left());
}

KroneckerStructure canonicalize(const KroneckerStructure& k) {
  return canonicalize_relative(k, {});
}

KroneckerStructure relabel(const KroneckerStructure& k,
                           std::span<const EigenvalueLabel> from,
                           std::span<const EigenvalueLabel> to) {
  if (from.size() != to.size()) {
    throw Error(Errc::bad_parameters, "relabel: label lists differ in length");
  }
  if (std::set<EigenvalueLabel>(to.begin(), to.end()).size() != to.size()) {
    throw Error(Errc::non_injective_assignment, "relabel: target labels repeat");
  }
  std::vector<JordanBlock> jordan;
  for (const auto& b : k.jordan()) {
    const auto it = std::find(from.begin(), from.end(), b.eigenvalue);
    jordan.push_back({it == from.end() ? b.eigenvalue : to[it - from.begin()], b.size});
  }
  return KroneckerStructure(std::move(jordan), k.right(), k.left());
}

}  // namespace kcf
