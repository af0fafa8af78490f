#pragma once

// Orbit-closure inclusion between pencils of the same size, decided from the
// three weak majorizations on right/left minimal-index Weyr data and
// per-eigenvalue Weyr characteristics.
//
// Orientation: degenerates_to(L, M) means M lies in the closure of the orbit
// of L (L is the more generic pencil).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kcf/structure.hpp"

namespace kcf {

// lower ≺_w upper: every prefix sum of `lower` is bounded by the matching
// prefix sum of `upper` (both zero-extended).
bool weakly_majorizes(const IntSequence& upper, const IntSequence& lower);

// lower ≺_w upper + (shift, shift, ...). The shifted sequence is never
// built; the j-th comparison adds j * shift on the right.
bool weakly_majorizes_shifted(const IntSequence& upper, std::int64_t shift,
                              const IntSequence& lower);

struct MajorizationWitness {
  std::string condition;  // "M1", "M2" or "M3(<label>)"
  IntSequence lower;
  IntSequence upper;
  std::int64_t shift = 0;
  std::vector<std::int64_t> lower_partial_sums;
  std::vector<std::int64_t> upper_partial_sums;  // shift included
  bool holds = false;
};

struct DegenerationWitness {
  std::int64_t rank_l = 0;
  std::int64_t rank_m = 0;
  std::int64_t h = 0;  // rank_l - rank_m
  std::vector<MajorizationWitness> conditions;  // empty when h < 0
  bool holds = false;
};

// Full evidence for the inclusion test; throws Errc::size_mismatch.
DegenerationWitness explain_degeneration(const KroneckerStructure& l,
                                         const KroneckerStructure& m);

// True iff M is in the closure of O(L). Returns false when rank M > rank L.
// Throws Errc::size_mismatch.
bool degenerates_to(const KroneckerStructure& l, const KroneckerStructure& m);

// Labels are concrete points: two structures share an orbit iff their block
// multisets coincide exactly.
bool same_orbit(const KroneckerStructure& l, const KroneckerStructure& m);

struct ClosureGraph {
  std::vector<KroneckerStructure> nodes;
  std::vector<std::int64_t> codimensions;
  // (i, j): node j lies in the closure of node i, covering relation only.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Throws Errc::size_mismatch and Errc::duplicate_node.
ClosureGraph build_closure_graph(std::vector<KroneckerStructure> nodes);

}  // namespace kcf
