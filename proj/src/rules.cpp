#include "kcf/rules.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "kcf/closure.hpp"
#include "kcf/error.hpp"

namespace kcf {

RuleInstance RuleInstance::singular_shift(Side side, int j, int k) {
  RuleInstance r;
  r.rule = side == Side::right ? 1 : 2;
  r.j = j;
  r.k = k;
  return r;
}

RuleInstance RuleInstance::absorb(Side side, int j, int k, EigenvalueLabel mu) {
  RuleInstance r;
  r.rule = side == Side::right ? 3 : 4;
  r.j = j;
  r.k = k;
  r.mu = mu;
  return r;
}

RuleInstance RuleInstance::jordan_shift(int j, int k, EigenvalueLabel mu) {
  RuleInstance r;
  r.rule = 5;
  r.j = j;
  r.k = k;
  r.mu = mu;
  return r;
}

RuleInstance RuleInstance::merge(int p, int q, std::vector<RulePart> parts) {
  RuleInstance r;
  r.rule = 6;
  r.p = p;
  r.q = q;
  std::sort(parts.begin(), parts.end());
  r.parts = std::move(parts);
  return r;
}

void RuleInstance::validate() const {
  auto fail = [this](const char* why) {
    throw Error(Errc::bad_parameters, "rule " + std::to_string(rule) + ": " + why);
  };
  switch (rule) {
    case 1:
    case 2:
    case 5:
      if (j < 1 || j > k) fail("requires 1 <= j <= k");
      break;
    case 3:
    case 4:
      if (j < 0 || k < 0) fail("requires j, k >= 0");
      break;
    case 6: {
      if (p < 0 || q < 0) fail("requires p, q >= 0");
      if (parts.empty()) fail("requires at least one part");
      int total = 0;
      std::set<EigenvalueLabel> seen;
      for (const auto& part : parts) {
        if (part.size < 1) fail("part sizes must be >= 1");
        if (!seen.insert(part.eigenvalue).second) fail("part eigenvalues must be distinct");
        total += part.size;
      }
      if (total != p + q + 1) fail("part sizes must sum to p + q + 1");
      break;
    }
    default:
      throw Error(Errc::bad_parameters, "rule id must be in 1..6");
  }
}

std::string RuleInstance::to_string() const {
  std::string out = "rule " + std::to_string(rule) + " ";
  if (rule == 6) {
    out += "(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ",parts=[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ",";
      out += "(" + std::to_string(parts[i].size) + "," + parts[i].eigenvalue.to_string() + ")";
    }
    return out + "])";
  }
  out += "(j=" + std::to_string(j) + ",k=" + std::to_string(k);
  if (rule >= 3) out += ",mu=" + mu.to_string();
  return out + ")";
}

namespace {

template <typename T>
void take(std::vector<T>& blocks, const T& block) {
  const auto it = std::find(blocks.begin(), blocks.end(), block);
  if (it == blocks.end()) {
    throw Error(Errc::missing_blocks, "rule consumes a block that is not present");
  }
  blocks.erase(it);
}

template <typename T>
std::vector<T> distinct(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// All partitions of `total` into parts >= 1, non-increasing.
void partitions(int total, int max_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(total, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(total - part, part, current, out);
    current.pop_back();
  }
}

// Distinct labels for the parts; equal-size neighbours take increasing
// labels so permutations among them are not repeated.
void assign_labels(const std::vector<int>& sizes, std::span<const EigenvalueLabel> pool,
                   std::vector<RulePart>& current, std::vector<bool>& used, int p, int q,
                   std::vector<RuleInstance>& out) {
  const std::size_t i = current.size();
  if (i == sizes.size()) {
    out.push_back(RuleInstance::merge(p, q, current));
    return;
  }
  for (std::size_t c = 0; c < pool.size(); ++c) {
    if (used[c]) continue;
    if (i > 0 && sizes[i] == sizes[i - 1] && !(current.back().eigenvalue < pool[c])) continue;
    used[c] = true;
    current.push_back({sizes[i], pool[c]});
    assign_labels(sizes, pool, current, used, p, q, out);
    current.pop_back();
    used[c] = false;
  }
}

}  // namespace

KroneckerStructure apply_rule(const KroneckerStructure& k, const RuleInstance& inst) {
  inst.validate();
  auto jordan = k.jordan();
  auto right = k.right();
  auto left = k.left();
  switch (inst.rule) {
    case 1:
    case 2: {
      auto& side = inst.rule == 1 ? right : left;
      take(side, inst.j - 1);
      take(side, inst.k + 1);
      side.push_back(inst.j);
      side.push_back(inst.k);
      break;
    }
    case 3:
    case 4: {
      auto& side = inst.rule == 3 ? right : left;
      take(side, inst.j);
      take(jordan, JordanBlock{inst.mu, inst.k + 1});
      side.push_back(inst.j + 1);
      if (inst.k > 0) jordan.push_back({inst.mu, inst.k});
      break;
    }
    case 5:
      take(jordan, JordanBlock{inst.mu, inst.j});
      take(jordan, JordanBlock{inst.mu, inst.k});
      if (inst.j > 1) jordan.push_back({inst.mu, inst.j - 1});
      jordan.push_back({inst.mu, inst.k + 1});
      break;
    case 6:
      take(right, inst.p);
      take(left, inst.q);
      for (const auto& part : inst.parts) jordan.push_back({part.eigenvalue, part.size});
      break;
  }
  return KroneckerStructure(std::move(jordan), std::move(right), std::move(left));
}

std::vector<RuleInstance> applicable_instances(const KroneckerStructure& k,
                                               std::span<const EigenvalueLabel> pool) {
  const auto labels = distinct(std::vector<EigenvalueLabel>(pool.begin(), pool.end()));
  const auto eigenvalues = k.eigenvalues();
  std::size_t fresh = labels.size();
  for (auto mu : eigenvalues) {
    if (!std::binary_search(labels.begin(), labels.end(), mu)) {
      throw Error(Errc::pool_too_small, "label pool misses eigenvalue " + mu.to_string());
    }
    --fresh;
  }
  const auto [m, n] = size_of(k);
  if (static_cast<std::int64_t>(fresh) < std::min(m, n)) {
    throw Error(Errc::pool_too_small, "label pool needs min(m, n) labels beyond the spectrum");
  }

  std::vector<RuleInstance> out;
  for (const Side side : {Side::right, Side::left}) {
    const auto sizes = distinct(k.singular(side));
    for (int a : sizes) {
      for (int b : sizes) {
        if (b >= a + 2) out.push_back(RuleInstance::singular_shift(side, a + 1, b - 1));
      }
    }
    const auto jordan = distinct(k.jordan());
    for (int j : sizes) {
      for (const auto& block : jordan) {
        out.push_back(RuleInstance::absorb(side, j, block.size - 1, block.eigenvalue));
      }
    }
  }

  for (auto mu : eigenvalues) {
    const auto segre = k.segre(mu);  // descending
    for (std::size_t a = 0; a < segre.size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        out.push_back(RuleInstance::jordan_shift(segre[a], segre[b], mu));
      }
    }
  }

  for (int p : distinct(k.right())) {
    for (int q : distinct(k.left())) {
      std::vector<std::vector<int>> shapes;
      std::vector<int> current;
      partitions(p + q + 1, p + q + 1, current, shapes);
      for (const auto& shape : shapes) {
        std::vector<RulePart> parts;
        std::vector<bool> used(labels.size(), false);
        assign_labels(shape, labels, parts, used, p, q, out);
      }
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EigenvalueLabel> pinned_labels(const KroneckerStructure& m) {
  auto labels = m.eigenvalues();
  if (labels.empty() || !labels.back().is_infinity()) {
    labels.push_back(EigenvalueLabel::infinity());
  }
  return labels;
}

namespace {

struct Edge {
  KroneckerStructure parent;
  RuleInstance instance;
  // raw successor label -> canonical label
  std::map<EigenvalueLabel, EigenvalueLabel> renaming;
};

std::uint32_t max_finite_id(std::span<const EigenvalueLabel> labels) {
  std::uint32_t top = 0;
  for (auto mu : labels) {
    if (!mu.is_infinity()) top = std::max(top, mu.id());
  }
  return top;
}

// Expands one canonical state. Calls visit(successor, instance, renaming)
// for every distinct successor.
template <typename Visit>
void expand(const KroneckerStructure& state, std::span<const EigenvalueLabel> pinned,
            Visit&& visit) {
  std::vector<EigenvalueLabel> pool(pinned.begin(), pinned.end());
  for (auto mu : state.eigenvalues()) pool.push_back(mu);
  const auto [m, n] = size_of(state);
  std::uint32_t next = std::max(max_finite_id(pool), max_finite_id(pinned)) + 1;
  for (std::int64_t i = 0; i < std::min(m, n); ++i) {
    pool.push_back(EigenvalueLabel::finite(next++));
  }

  const auto codim = codimension(state);
  std::set<KroneckerStructure> seen;
  for (const auto& inst : applicable_instances(state, pool)) {
    const auto raw = apply_rule(state, inst);
    if (size_of(raw) != size_of(state) || codimension(raw) >= codim) {
      throw std::logic_error("rule " + inst.to_string() +
                             " did not strictly lower the codimension");
    }
    auto renaming = canonical_renaming(raw, pinned);
    auto next_state = canonicalize_relative(raw, pinned);
    if (!seen.insert(next_state).second) continue;
    visit(std::move(next_state), inst, std::move(renaming));
  }
}

// Rewrites the canonical-state path so that each instance applies directly
// to the output of the previous one, starting from `start`.
std::vector<RuleInstance> replay(const KroneckerStructure& start,
                                 std::span<const EigenvalueLabel> pinned,
                                 const std::vector<const Edge*>& edges) {
  std::uint32_t next = max_finite_id(pinned) + 1;
  for (const Edge* edge : edges) {
    next = std::max(next, max_finite_id(edge->parent.eigenvalues()) + 1);
    for (const auto& part : edge->instance.parts) {
      next = std::max(next, part.eigenvalue.is_infinity() ? 0u : part.eigenvalue.id() + 1);
    }
  }

  auto is_pinned = [&](EigenvalueLabel mu) {
    return std::find(pinned.begin(), pinned.end(), mu) != pinned.end();
  };

  std::vector<RuleInstance> path;
  auto actual = start;
  // actual label -> label of the current canonical state
  std::map<EigenvalueLabel, EigenvalueLabel> to_canonical;
  for (auto mu : start.eigenvalues()) to_canonical.emplace(mu, mu);

  for (const Edge* edge : edges) {
    std::map<EigenvalueLabel, EigenvalueLabel> to_actual;
    for (const auto& [a, c] : to_canonical) to_actual.emplace(c, a);

    // actual label -> raw successor label, for labels introduced here
    std::map<EigenvalueLabel, EigenvalueLabel> introduced;
    auto translate = [&](EigenvalueLabel mu) {
      if (const auto it = to_actual.find(mu); it != to_actual.end()) return it->second;
      if (is_pinned(mu)) {
        introduced.emplace(mu, mu);
        return mu;
      }
      const auto fresh = EigenvalueLabel::finite(next++);
      to_actual.emplace(mu, fresh);
      introduced.emplace(fresh, mu);
      return fresh;
    };
    RuleInstance inst = edge->instance;
    if (inst.rule >= 3 && inst.rule <= 5) inst.mu = translate(inst.mu);
    if (inst.rule == 6) {
      for (auto& part : inst.parts) part.eigenvalue = translate(part.eigenvalue);
      inst = RuleInstance::merge(inst.p, inst.q, inst.parts);
    }
    actual = apply_rule(actual, inst);
    path.push_back(inst);

    std::map<EigenvalueLabel, EigenvalueLabel> next_map;
    for (auto a : actual.eigenvalues()) {
      const auto it = to_canonical.find(a);
      const auto raw = it != to_canonical.end() ? it->second : introduced.at(a);
      const auto renamed = edge->renaming.find(raw);
      next_map.emplace(a, renamed == edge->renaming.end() ? raw : renamed->second);
    }
    to_canonical = std::move(next_map);
  }
  return path;
}

}  // namespace

std::optional<std::vector<RuleInstance>> reachable(const KroneckerStructure& m,
                                                   const KroneckerStructure& l, bool prune,
                                                   SearchLimits limits) {
  if (size_of(m) != size_of(l)) {
    throw Error(Errc::size_mismatch, "reachability needs pencils of the same size");
  }
  if (m == l) return std::vector<RuleInstance>{};
  // Rules 1-5 keep the rank and rule 6 raises it; every rule lowers the
  // codimension.
  if (rank_of(l) < rank_of(m) || codimension(l) >= codimension(m)) return std::nullopt;

  auto pinned = pinned_labels(m);
  for (auto mu : l.eigenvalues()) pinned.push_back(mu);
  pinned = distinct(std::move(pinned));
  const auto floor = codimension(l);

  std::map<KroneckerStructure, Edge> parent;
  std::deque<KroneckerStructure> frontier{m};
  std::set<KroneckerStructure> visited{m};
  while (!frontier.empty()) {
    const auto state = std::move(frontier.front());
    frontier.pop_front();
    bool found = false;
    expand(state, pinned, [&](KroneckerStructure next, const RuleInstance& inst,
                              std::map<EigenvalueLabel, EigenvalueLabel> renaming) {
      if (found || codimension(next) < floor) return;
      if (prune && !degenerates_to(l, next)) return;
      if (!visited.insert(next).second) return;
      if (visited.size() > limits.max_states) {
        throw Error(Errc::search_budget_exceeded, "reachability search budget exceeded");
      }
      parent.emplace(next, Edge{state, inst, std::move(renaming)});
      if (next == l) {
        found = true;
        return;
      }
      frontier.push_back(std::move(next));
    });
    if (found) {
      std::vector<const Edge*> edges;
      for (auto at = l; at != m;) {
        const Edge& e = parent.at(at);
        edges.push_back(&e);
        at = e.parent;
      }
      std::reverse(edges.begin(), edges.end());
      return replay(m, pinned, edges);
    }
  }
  return std::nullopt;
}

std::set<KroneckerStructure> descendants(const KroneckerStructure& m, SearchLimits limits) {
  const auto pinned = pinned_labels(m);
  const auto start = canonicalize_relative(m, pinned);
  std::set<KroneckerStructure> visited{start};
  std::deque<KroneckerStructure> frontier{start};
  while (!frontier.empty()) {
    const auto state = std::move(frontier.front());
    frontier.pop_front();
    expand(state, pinned, [&](KroneckerStructure next, const RuleInstance&,
                              std::map<EigenvalueLabel, EigenvalueLabel>) {
      if (!visited.insert(next).second) return;
      if (visited.size() > limits.max_states) {
        throw Error(Errc::search_budget_exceeded, "reachability search budget exceeded");
      }
      frontier.push_back(std::move(next));
    });
  }
  return visited;
}

}  // namespace kcf
