#include "kcf/closure.hpp"

#include <algorithm>
#include <set>

#include "kcf/error.hpp"

namespace kcf {

namespace {

MajorizationWitness compare(std::string condition, IntSequence upper, std::int64_t shift,
                            IntSequence lower) {
  MajorizationWitness w{std::move(condition), std::move(lower), std::move(upper), shift, {}, {}, true};
  // Past the longer operand the left side is constant and the right side
  // does not decrease, so longer prefixes cannot fail.
  const std::size_t len = std::max<std::size_t>({w.lower.size(), w.upper.size(), 1});
  std::int64_t lo = 0;
  std::int64_t up = 0;
  for (std::size_t j = 0; j < len; ++j) {
    lo += w.lower[j];
    up += w.upper[j] + shift;
    w.lower_partial_sums.push_back(lo);
    w.upper_partial_sums.push_back(up);
    if (lo > up) w.holds = false;
  }
  return w;
}

}  // namespace

bool weakly_majorizes_shifted(const IntSequence& upper, std::int64_t shift,
                              const IntSequence& lower) {
  const std::size_t len = std::max(lower.size(), upper.size());
  std::int64_t slack = 0;
  for (std::size_t j = 0; j < len; ++j) {
    slack += upper[j] + shift - lower[j];
    if (slack < 0) return false;
  }
  return true;
}

bool weakly_majorizes(const IntSequence& upper, const IntSequence& lower) {
  return weakly_majorizes_shifted(upper, 0, lower);
}

DegenerationWitness explain_degeneration(const KroneckerStructure& l,
                                         const KroneckerStructure& m) {
  if (size_of(l) != size_of(m)) {
    throw Error(Errc::size_mismatch, "closure test needs pencils of the same size");
  }
  DegenerationWitness w;
  w.rank_l = rank_of(l);
  w.rank_m = rank_of(m);
  w.h = w.rank_l - w.rank_m;
  if (w.h < 0) return w;

  w.conditions.push_back(compare("M1", weyr_singular(l, Side::right), w.h,
                                 weyr_singular(m, Side::right)));
  w.conditions.push_back(compare("M2", weyr_singular(l, Side::left), w.h,
                                 weyr_singular(m, Side::left)));
  std::set<EigenvalueLabel> labels;
  for (auto mu : l.eigenvalues()) labels.insert(mu);
  for (auto mu : m.eigenvalues()) labels.insert(mu);
  for (auto mu : labels) {
    w.conditions.push_back(compare("M3(" + mu.to_string() + ")", weyr_jordan(m, mu), w.h,
                                   weyr_jordan(l, mu)));
  }
  w.holds = std::all_of(w.conditions.begin(), w.conditions.end(),
                        [](const MajorizationWitness& c) { return c.holds; });
  return w;
}

bool degenerates_to(const KroneckerStructure& l, const KroneckerStructure& m) {
  if (size_of(l) != size_of(m)) {
    throw Error(Errc::size_mismatch, "closure test needs pencils of the same size");
  }
  const auto h = rank_of(l) - rank_of(m);
  if (h < 0) return false;
  if (!weakly_majorizes_shifted(weyr_singular(l, Side::right), h,
                                weyr_singular(m, Side::right)) ||
      !weakly_majorizes_shifted(weyr_singular(l, Side::left), h,
                                weyr_singular(m, Side::left))) {
    return false;
  }
  // Eigenvalues outside both spectra give an empty left side.
  for (const auto* k : {&l, &m}) {
    for (auto mu : k->eigenvalues()) {
      if (!weakly_majorizes_shifted(weyr_jordan(m, mu), h, weyr_jordan(l, mu))) return false;
    }
  }
  return true;
}

bool same_orbit(const KroneckerStructure& l, const KroneckerStructure& m) { return l == m; }

ClosureGraph build_closure_graph(std::vector<KroneckerStructure> nodes) {
  ClosureGraph g;
  const std::size_t count = nodes.size();
  for (std::size_t i = 1; i < count; ++i) {
    if (size_of(nodes[i]) != size_of(nodes[0])) {
      throw Error(Errc::size_mismatch, "closure graph nodes must share one size");
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (same_orbit(nodes[i], nodes[j])) {
        throw Error(Errc::duplicate_node, "closure graph nodes must be distinct orbits");
      }
    }
  }

  std::vector<std::vector<char>> below(count, std::vector<char>(count, 0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      below[i][j] = i != j && degenerates_to(nodes[i], nodes[j]);
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (!below[i][j]) continue;
      bool covering = true;
      for (std::size_t k = 0; k < count && covering; ++k) {
        if (below[i][k] && below[k][j]) covering = false;
      }
      if (covering) g.edges.emplace_back(i, j);
    }
  }
  g.codimensions.reserve(count);
  for (const auto& k : nodes) g.codimensions.push_back(codimension(k));
  g.nodes = std::move(nodes);
  return g;
}

}  // namespace kcf
