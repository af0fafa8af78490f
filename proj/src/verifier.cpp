#include "kcf/verifier.hpp"

#include <algorithm>
#include <set>

#include "kcf/closure.hpp"
#include "kcf/error.hpp"
#include "kcf/lemmas.hpp"
#include "kcf/pencil.hpp"
#include "kcf/rules.hpp"

namespace kcf {

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

namespace {

// --- enumeration -------------------------------------------------------------

// Multisets of `count` non-negative integers summing to `total`, descending.
void singular_sizes(int count, int total, int cap, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
  if (count == 0) {
    if (total == 0) out.push_back(current);
    return;
  }
  for (int s = std::min(total, cap); s >= 0; --s) {
    current.push_back(s);
    singular_sizes(count - 1, total - s, s, current, out);
    current.pop_back();
  }
}

void integer_partitions(int total, int cap, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (int s = std::min(total, cap); s >= 1; --s) {
    current.push_back(s);
    integer_partitions(total - s, s, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> partitions_of(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  integer_partitions(total, total, current, out);
  return out;
}

// Multisets of non-empty Segre characteristics for at most `labels` finite
// eigenvalues, with total size `total`. Emitted in non-increasing order.
void finite_spectra(int total, int labels, std::vector<std::vector<int>>& current,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  if (labels == 0) return;
  for (int part_total = total; part_total >= 1; --part_total) {
    for (auto& segre : partitions_of(part_total)) {
      if (!current.empty() && segre > current.back()) continue;
      current.push_back(segre);
      finite_spectra(total - part_total, labels - 1, current, out);
      current.pop_back();
    }
  }
}

// --- reporting ---------------------------------------------------------------

class Check {
 public:
  explicit Check(std::string id) { result_.id = std::move(id); }

  void pass() { ++result_.evaluated; }

  void fail(Counterexample example) {
    ++result_.evaluated;
    ++result_.violations;
    if (!result_.counterexample) result_.counterexample = std::move(example);
  }

  void expect(bool ok, const std::function<Counterexample()>& example) {
    if (ok) {
      pass();
    } else {
      fail(example());
    }
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string sums(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

void add_witness(Counterexample& ex, const KroneckerStructure& l, const KroneckerStructure& m) {
  const auto w = explain_degeneration(l, m);
  ex.diagnostics.emplace_back("h", std::to_string(w.h));
  for (const auto& c : w.conditions) {
    ex.diagnostics.emplace_back(c.condition, "lower " + sums(c.lower_partial_sums) +
                                                 " vs upper+h " + sums(c.upper_partial_sums) +
                                                 (c.holds ? " holds" : " fails"));
  }
}

Counterexample pair_example(const KroneckerStructure& l, const KroneckerStructure& m,
                            const std::function<std::int64_t(const KroneckerStructure&)>& codim) {
  Counterexample ex{l, m, {}};
  ex.diagnostics.emplace_back("codim(L)", std::to_string(codim(l)));
  ex.diagnostics.emplace_back("codim(M)", std::to_string(codim(m)));
  add_witness(ex, l, m);
  return ex;
}

struct Context {
  std::vector<KroneckerStructure> nodes;
  std::function<std::int64_t(const KroneckerStructure&)> codim;
  VerificationReport report;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void finish() {
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
  }
};

Context prepare(int m, int n, const VerifyOptions& options) {
  Context ctx;
  const int pool = options.pool_size.value_or(std::min(m, n));
  ctx.nodes = enumerate_structures(m, n, pool, options.include_infinity);
  const auto count = static_cast<std::uint64_t>(ctx.nodes.size());
  if (count * count > options.max_pairs) {
    throw Error(Errc::enumeration_limit_exceeded,
                std::to_string(count) + " structures exceed the pair limit of " +
                    std::to_string(options.max_pairs));
  }
  ctx.report.size = {m, n};
  ctx.report.node_count = ctx.nodes.size();
  if (options.inject_fault) {
    ctx.codim = [](const KroneckerStructure& k) {
      return codimension(k) + (k.jordan().empty() ? 1 : 0);
    };
  } else {
    ctx.codim = [](const KroneckerStructure& k) { return codimension(k); };
  }
  return ctx;
}

std::vector<std::int64_t> padded(const IntSequence& s, std::size_t from, std::size_t length) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(s[from + i]);
  return out;
}

// Rebuilds codim(M) - codim(L) for an h = 0 degeneration from the two sides
// of the sum-of-squares and adjacent-product inequalities. Returns nullopt if
// a lemma reports a violated inequality or equality characterization.
std::optional<std::int64_t> inequality_codimension_gap(const KroneckerStructure& l,
                                                  const KroneckerStructure& m) {
  std::int64_t gap = 0;
  std::set<EigenvalueLabel> labels;
  for (auto mu : l.eigenvalues()) labels.insert(mu);
  for (auto mu : m.eigenvalues()) labels.insert(mu);
  for (auto mu : labels) {
    const auto wl = weyr_jordan(l, mu);
    const auto wm = weyr_jordan(m, mu);
    const std::size_t k = std::max({wl.size(), wm.size(), std::size_t{1}});
    const auto r = square_product_bounds(std::max(wl[0], wm[0]), padded(wl, 0, k), padded(wm, 0, k));
    if (r.squares.lhs > r.squares.rhs || !r.equality_iff_equal_ok) return std::nullopt;
    gap += r.squares.rhs - r.squares.lhs;
  }
  for (const Side side : {Side::right, Side::left}) {
    const auto sl = weyr_singular(l, side);
    const auto sm = weyr_singular(m, side);
    const std::size_t k = std::max({sl.size(), sm.size(), std::size_t{2}}) - 1;
    const auto r = square_product_bounds(sl[0], padded(sm, 1, k), padded(sl, 1, k));
    if (r.products.lhs > r.products.rhs || !r.equality_iff_equal_ok) return std::nullopt;
    gap += r.products.rhs - r.products.lhs;
  }
  return gap;
}

}  // namespace

std::vector<KroneckerStructure> enumerate_structures(int m, int n, int pool_size,
                                                     bool include_infinity) {
  if (m < 1 || n < 1) throw Error(Errc::invalid_size, "sizes must be at least 1");
  if (pool_size < 0) throw Error(Errc::invalid_size, "label pool size must be non-negative");

  std::set<KroneckerStructure> found;
  // With b left and a right blocks: m = s + b and n = s + a, where s is the
  // total of Jordan sizes and singular-block indices.
  for (int b = 0; b <= m; ++b) {
    const int a = n - m + b;
    if (a < 0) continue;
    const int s = m - b;
    for (int right_total = 0; right_total <= s; ++right_total) {
      std::vector<std::vector<int>> rights;
      std::vector<int> scratch;
      singular_sizes(a, right_total, right_total, scratch, rights);
      if (rights.empty()) continue;
      for (int left_total = 0; left_total + right_total <= s; ++left_total) {
        std::vector<std::vector<int>> lefts;
        singular_sizes(b, left_total, left_total, scratch, lefts);
        if (lefts.empty()) continue;
        const int regular = s - right_total - left_total;
        for (int at_infinity = 0; at_infinity <= (include_infinity ? regular : 0); ++at_infinity) {
          std::vector<std::vector<int>> infinite_parts =
              at_infinity == 0 ? std::vector<std::vector<int>>{{}} : partitions_of(at_infinity);
          std::vector<std::vector<std::vector<int>>> spectra;
          std::vector<std::vector<int>> current;
          finite_spectra(regular - at_infinity, pool_size, current, spectra);
          for (const auto& inf_segre : infinite_parts) {
            for (const auto& spectrum : spectra) {
              std::vector<JordanBlock> jordan;
              for (int size : inf_segre) jordan.push_back({EigenvalueLabel::infinity(), size});
              for (std::size_t e = 0; e < spectrum.size(); ++e) {
                const auto label = EigenvalueLabel::finite(static_cast<std::uint32_t>(e + 1));
                for (int size : spectrum[e]) jordan.push_back({label, size});
              }
              for (const auto& r : rights) {
                for (const auto& l : lefts) {
                  found.insert(canonicalize(KroneckerStructure(jordan, r, l)));
                }
              }
            }
          }
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

std::set<KroneckerStructure> shared_embeddings(const std::vector<KroneckerStructure>& nodes,
                                               const KroneckerStructure& m) {
  const auto pinned = pinned_labels(m);
  std::vector<EigenvalueLabel> m_finite;
  std::uint32_t fresh = 1;
  for (auto mu : m.eigenvalues()) {
    if (mu.is_infinity()) continue;
    m_finite.push_back(mu);
    fresh = std::max(fresh, mu.id() + 1);
  }
  std::set<KroneckerStructure> embedded;
  for (const auto& l : nodes) {
    if (size_of(l) != size_of(m)) continue;
    std::vector<EigenvalueLabel> l_finite;
    for (auto mu : l.eigenvalues()) {
      if (!mu.is_infinity()) l_finite.push_back(mu);
    }
    std::vector<EigenvalueLabel> target(l_finite.size());
    std::vector<bool> used(m_finite.size(), false);
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
      if (i == l_finite.size()) {
        embedded.insert(canonicalize_relative(relabel(l, l_finite, target), pinned));
        return;
      }
      for (std::size_t c = 0; c < m_finite.size(); ++c) {
        if (used[c]) continue;
        used[c] = true;
        target[i] = m_finite[c];
        assign(i + 1);
        used[c] = false;
      }
      target[i] = EigenvalueLabel::finite(fresh + static_cast<std::uint32_t>(i));
      assign(i + 1);
    };
    assign(0);
  }
  return embedded;
}

void for_each_shared_pair(
    const std::vector<KroneckerStructure>& nodes,
    const std::function<void(const KroneckerStructure&, const KroneckerStructure&)>& visit) {
  for (const auto& m : nodes) {
    for (const auto& l : shared_embeddings(nodes, m)) visit(l, m);
  }
}

VerificationReport verify_dim_theorem(int m, int n, const VerifyOptions& options) {
  auto ctx = prepare(m, n, options);
  Check monotone("dim.codim_monotone");
  Check equality("dim.equality_iff_same_orbit");
  Check structure("dim.equality_forces_h0_and_equal_weyr");
  Check lemmas("dim.inequality_consistency");

  for_each_shared_pair(ctx.nodes, [&](const KroneckerStructure& l, const KroneckerStructure& mm) {
    ++ctx.report.pair_count;
    if (!degenerates_to(l, mm)) return;
    const auto cl = ctx.codim(l);
    const auto cm = ctx.codim(mm);
    auto example = [&] { return pair_example(l, mm, ctx.codim); };
    monotone.expect(cl <= cm, example);
    equality.expect((cl == cm) == same_orbit(l, mm), example);
    if (cl == cm) {
      bool equal = rank_of(l) == rank_of(mm) &&
                   weyr_singular(l, Side::right) == weyr_singular(mm, Side::right) &&
                   weyr_singular(l, Side::left) == weyr_singular(mm, Side::left);
      for (const auto* k : {&l, &mm}) {
        for (auto mu : k->eigenvalues()) equal = equal && weyr_jordan(l, mu) == weyr_jordan(mm, mu);
      }
      structure.expect(equal, example);
    }
    if (rank_of(l) == rank_of(mm)) {
      const auto gap = inequality_codimension_gap(l, mm);
      lemmas.expect(gap && *gap == cm - cl, [&] {
        auto ex = example();
        ex.diagnostics.emplace_back("bound_gap", gap ? std::to_string(*gap) : "bound violated");
        return ex;
      });
    }
  });

  for (auto* c : {&monotone, &equality, &structure, &lemmas}) ctx.report.checks.push_back(c->take());
  ctx.finish();
  return ctx.report;
}

VerificationReport cross_validate_characterizations(int m, int n, const VerifyOptions& options) {
  auto ctx = prepare(m, n, options);
  Check agreement("rules.majorization_vs_reachability");
  Check pruned("rules.pruned_search_agreement");
  const SearchLimits limits{options.search_budget};

  for (const auto& root : ctx.nodes) {
    const auto reach = descendants(root, limits);
    const auto targets = shared_embeddings(ctx.nodes, root);
    for (const auto& l : targets) {
      ++ctx.report.pair_count;
      const bool closure = degenerates_to(l, root);
      const bool rules = reach.contains(l);
      agreement.expect(closure == rules, [&] {
        Counterexample ex{l, root, {}};
        ex.diagnostics.emplace_back("degenerates_to", closure ? "true" : "false");
        ex.diagnostics.emplace_back("reachable", rules ? "true" : "false");
        ex.diagnostics.emplace_back("states_from_M", std::to_string(reach.size()));
        add_witness(ex, l, root);
        return ex;
      });
      if (options.check_pruned_search) {
        const bool found = reachable(root, l, true, limits).has_value();
        pruned.expect(found == rules, [&] {
          Counterexample ex{l, root, {}};
          ex.diagnostics.emplace_back("pruned", found ? "true" : "false");
          ex.diagnostics.emplace_back("unpruned", rules ? "true" : "false");
          return ex;
        });
      }
    }
  }

  ctx.report.checks.push_back(agreement.take());
  if (options.check_pruned_search) ctx.report.checks.push_back(pruned.take());
  ctx.finish();
  return ctx.report;
}

VerificationReport verify_rule_steps(int m, int n, const VerifyOptions& options) {
  auto ctx = prepare(m, n, options);
  Check step("rules.step_monotone");
  for (const auto& k : ctx.nodes) {
    auto pool = pinned_labels(k);
    std::uint32_t next = 1;
    for (auto mu : pool) {
      if (!mu.is_infinity()) next = std::max(next, mu.id() + 1);
    }
    for (int i = 0; i < std::min(m, n); ++i) pool.push_back(EigenvalueLabel::finite(next++));
    for (const auto& inst : applicable_instances(k, pool)) {
      ++ctx.report.pair_count;
      const auto out = apply_rule(k, inst);
      const auto rank_gain = rank_of(out) - rank_of(k);
      const bool ok = size_of(out) == size_of(k) && ctx.codim(out) < ctx.codim(k) &&
                      canonicalize(out) != canonicalize(k) &&
                      rank_gain == (inst.rule == 6 ? 1 : 0);
      step.expect(ok, [&] {
        Counterexample ex{k, out, {}};
        ex.diagnostics.emplace_back("rule", inst.to_string());
        ex.diagnostics.emplace_back("codim_before", std::to_string(ctx.codim(k)));
        ex.diagnostics.emplace_back("codim_after", std::to_string(ctx.codim(out)));
        ex.diagnostics.emplace_back("rank_gain", std::to_string(rank_gain));
        return ex;
      });
    }
  }
  ctx.report.checks.push_back(step.take());
  ctx.finish();
  return ctx.report;
}

VerificationReport verify_formula_identities(int m, int n, const VerifyOptions& options) {
  auto ctx = prepare(m, n, options);
  Check rank("formulas.rank_identity");
  Check sizes("formulas.size_identities");
  Check range("formulas.codim_range");
  Check tangent("formulas.codim_vs_tangent");
  Check invariance("formulas.equivalence_invariance");

  for (const auto& k : ctx.nodes) {
    const auto [rows, cols] = size_of(k);
    const auto r = weyr_singular(k, Side::right);
    const auto l = weyr_singular(k, Side::left);
    const auto codim = ctx.codim(k);
    const auto pencil = realize(k, default_assignment(k));
    auto single = [&](std::vector<std::pair<std::string, std::string>> diagnostics) {
      return Counterexample{k, std::nullopt, std::move(diagnostics)};
    };

    const auto rank_k = rank_of(k);
    const auto realized_rank = normal_rank(pencil);
    rank.expect(rows - l[0] == rank_k && cols - r[0] == rank_k && realized_rank == rank_k, [&] {
      return single({{"m - l0", std::to_string(rows - l[0])},
                     {"n - r0", std::to_string(cols - r[0])},
                     {"normal_rank", std::to_string(realized_rank)}});
    });

    std::int64_t jordan_total = 0;
    for (auto mu : k.eigenvalues()) jordan_total += weyr_jordan(k, mu).sum();
    const auto m_formula = (r.sum() - r[0]) + l.sum() + jordan_total;
    const auto n_formula = r.sum() + (l.sum() - l[0]) + jordan_total;
    sizes.expect(m_formula == rows && n_formula == cols, [&] {
      return single({{"m", std::to_string(rows)}, {"m_from_weyr", std::to_string(m_formula)},
                     {"n", std::to_string(cols)}, {"n_from_weyr", std::to_string(n_formula)}});
    });

    range.expect(codim >= 0 && codim <= 2 * rows * cols,
                 [&] { return single({{"codim", std::to_string(codim)}}); });

    const auto oracle = tangent_codimension(pencil);
    tangent.expect(oracle == codim, [&] {
      return single({{"codim", std::to_string(codim)}, {"tangent", std::to_string(oracle)}});
    });

    for (int s = 0; s < options.equivalence_seeds; ++s) {
      const auto seed = options.seed + static_cast<std::uint64_t>(s);
      const auto moved = random_equivalence(pencil, seed);
      const auto moved_codim = tangent_codimension(moved);
      const auto moved_rank = normal_rank(moved);
      invariance.expect(moved_codim == codim && moved_rank == rank_k, [&] {
        return single({{"seed", std::to_string(seed)},
                       {"codim", std::to_string(codim)},
                       {"tangent_after", std::to_string(moved_codim)},
                       {"normal_rank_after", std::to_string(moved_rank)}});
      });
    }
  }
  for (auto* c : {&rank, &sizes, &range, &tangent, &invariance}) {
    ctx.report.checks.push_back(c->take());
  }
  ctx.finish();
  return ctx.report;
}

}  // namespace kcf
