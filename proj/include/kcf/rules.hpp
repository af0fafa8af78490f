#pragma once

// The six elementary changes of a Kronecker structure that generate the
// closure order, and a breadth-first search over them.
//
//   1. L_{j-1} + L_{k+1}         ->  L_j + L_k            1 <= j <= k
//   2. L^T_{j-1} + L^T_{k+1}     ->  L^T_j + L^T_k        1 <= j <= k
//   3. L_j + J_{k+1}(mu)         ->  L_{j+1} + J_k(mu)    j, k >= 0
//   4. L^T_j + J_{k+1}(mu)       ->  L^T_{j+1} + J_k(mu)  j, k >= 0
//   5. J_j(mu) + J_k(mu)         ->  J_{j-1}(mu) + J_{k+1}(mu)  1 <= j <= k
//   6. L_p + L^T_q               ->  J_{n_1}(mu_1) + ... + J_{n_s}(mu_s)
//                                    sum n_i = p + q + 1, mu_i distinct
//
// J_0 is the empty block. Each change maps a structure to a more generic one
// (lower codimension); a path from M to L witnesses M in closure(O(L)).

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "kcf/structure.hpp"

namespace kcf {

struct RulePart {
  int size = 1;
  EigenvalueLabel eigenvalue;

  auto operator<=>(const RulePart&) const = default;
};

struct RuleInstance {
  int rule = 0;  // 1..6
  int j = 0;     // rules 1-5
  int k = 0;     // rules 1-5
  EigenvalueLabel mu;  // rules 3-5
  int p = 0;     // rule 6
  int q = 0;     // rule 6
  std::vector<RulePart> parts;  // rule 6, kept sorted

  static RuleInstance singular_shift(Side side, int j, int k);
  static RuleInstance absorb(Side side, int j, int k, EigenvalueLabel mu);
  static RuleInstance jordan_shift(int j, int k, EigenvalueLabel mu);
  static RuleInstance merge(int p, int q, std::vector<RulePart> parts);

  // Throws Errc::bad_parameters.
  void validate() const;

  std::string to_string() const;

  auto operator<=>(const RuleInstance&) const = default;
};

// Throws Errc::bad_parameters or Errc::missing_blocks.
KroneckerStructure apply_rule(const KroneckerStructure& k, const RuleInstance& inst);

// Every instance applicable to k. Rule-6 eigenvalues come from `pool`, which
// must hold every eigenvalue of k and at least min(m, n) other labels
// (Errc::pool_too_small). Sorted by (rule, parameters).
std::vector<RuleInstance> applicable_instances(const KroneckerStructure& k,
                                               std::span<const EigenvalueLabel> pool);

struct SearchLimits {
  std::size_t max_states = 2'000'000;
};

// A rule sequence turning M into L, or nullopt. Labels of M and L are
// concrete points in one label space; labels introduced along the way that
// occur in neither are interchangeable. With `prune`, states K that fail
// degenerates_to(L, K) are skipped. Without it, no majorization test is ever
// consulted. Throws Errc::size_mismatch and Errc::search_budget_exceeded.
std::optional<std::vector<RuleInstance>> reachable(const KroneckerStructure& m,
                                                   const KroneckerStructure& l,
                                                   bool prune,
                                                   SearchLimits limits = {});

// Every structure reachable from M by rule applications (M included),
// canonicalized relative to the labels of M. Use canonicalize_relative with
// the same pinned labels on a target before looking it up.
std::set<KroneckerStructure> descendants(const KroneckerStructure& m,
                                         SearchLimits limits = {});

// Labels pinned by descendants(): the eigenvalues of M plus infinity.
std::vector<EigenvalueLabel> pinned_labels(const KroneckerStructure& m);

}  // namespace kcf
