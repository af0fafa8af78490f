#pragma once

// Exhaustive desk-scale verification: enumerate every Kronecker structure of
// a given size and check the codimension monotonicity theorem, agreement of
// the majorization test with rule reachability, the per-step behaviour of
// the rules, and the closed-form invariants against the tangent oracle.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kcf/structure.hpp"

namespace kcf {

// Every canonical structure of size exactly m x n whose finite eigenvalues
// fit in `pool_size` labels, plus infinity when enabled. Sorted, unique.
// Throws Errc::invalid_size.
std::vector<KroneckerStructure> enumerate_structures(int m, int n, int pool_size,
                                                     bool include_infinity = true);

struct VerifyOptions {
  std::optional<int> pool_size;  // defaults to min(m, n)
  bool include_infinity = true;
  std::uint64_t max_pairs = 10'000'000;      // bound on node_count^2
  std::size_t search_budget = 2'000'000;     // states per reachability search
  int equivalence_seeds = 5;
  std::uint64_t seed = 0;
  bool check_pruned_search = true;
  // Test hook: adds 1 to the closed-form codimension of structures without
  // Jordan blocks, so that the suites must report violations.
  bool inject_fault = false;
};

struct Counterexample {
  std::optional<KroneckerStructure> first;
  std::optional<KroneckerStructure> second;
  std::vector<std::pair<std::string, std::string>> diagnostics;
};

struct CheckResult {
  std::string id;
  std::uint64_t evaluated = 0;
  std::uint64_t violations = 0;
  std::optional<Counterexample> counterexample;  // first violation

  bool passed() const noexcept { return violations == 0; }
};

struct VerificationReport {
  Dimensions size;
  std::size_t node_count = 0;
  std::uint64_t pair_count = 0;
  std::vector<CheckResult> checks;
  std::chrono::milliseconds elapsed{0};

  bool passed() const noexcept;
};

// Every structure of `nodes` with its finite eigenvalues re-embedded into
// the label space of M: each finite label either coincides with a distinct
// finite label of M or is new. Canonical relative to the labels of M.
std::set<KroneckerStructure> shared_embeddings(const std::vector<KroneckerStructure>& nodes,
                                               const KroneckerStructure& m);

// Calls visit(L, M) for every ordered pair over a shared label space: M runs
// over `nodes`; L runs over `nodes` with its eigenvalues re-embedded into
// those of M in every distinct way (each finite label of L either coincides
// with a distinct finite label of M or is new). Pairs are canonical relative
// to the labels of M.
void for_each_shared_pair(
    const std::vector<KroneckerStructure>& nodes,
    const std::function<void(const KroneckerStructure& l, const KroneckerStructure& m)>& visit);

// The codimension monotonicity theorem: for every pair with M in the closure
// of O(L), codim L <= codim M, with equality iff same orbit, and equality
// forcing h = 0 and equal Weyr data.
VerificationReport verify_dim_theorem(int m, int n, const VerifyOptions& options = {});

// degenerates_to(L, M) iff L is reachable from M by the six rules (searched
// without any majorization test). Throws Errc::search_budget_exceeded.
VerificationReport cross_validate_characterizations(int m, int n,
                                                    const VerifyOptions& options = {});

// Every single rule application on every structure keeps (m, n), strictly
// lowers the codimension, keeps the rank (rules 1-5) or raises it by one
// (rule 6).
VerificationReport verify_rule_steps(int m, int n, const VerifyOptions& options = {});

// Rank and size identities, 0 <= codim <= 2mn, closed-form codimension
// against the tangent-space corank, and invariance of tangent corank and
// normal rank under random strict equivalence.
VerificationReport verify_formula_identities(int m, int n, const VerifyOptions& options = {});

}  // namespace kcf
