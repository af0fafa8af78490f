// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything holds).
//
//   acceptance --cli <kcf> --faulty-cli <kcf_faulty> --golden <dir> [--update-golden]

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "CLI11.hpp"
#include "dot_check.hpp"
#include "kcf/closure.hpp"
#include "kcf/error.hpp"
#include "kcf/lemmas.hpp"
#include "kcf/notation.hpp"
#include "kcf/pencil.hpp"
#include "kcf/rules.hpp"
#include "kcf/verifier.hpp"

using namespace kcf;
using Ints = std::vector<std::int64_t>;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;  // first few, for the log

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

struct Settings {
  std::string cli;
  std::string faulty_cli;
  std::filesystem::path golden;
  bool update_golden = false;
};

KroneckerStructure S(const char* text) { return parse_structure(text); }

std::vector<std::pair<int, int>> sizes_up_to(int top) {
  std::vector<std::pair<int, int>> out;
  for (int m = 1; m <= top; ++m) {
    for (int n = 1; n <= top; ++n) out.emplace_back(m, n);
  }
  return out;
}

// --- criterion 1 -------------------------------------------------------------

Outcome formula_vs_tangent() {
  Outcome out;
  std::size_t count = 0;
  for (auto [m, n] : sizes_up_to(4)) {
    for (const auto& k : enumerate_structures(m, n, std::min(m, n))) {
      ++count;
      const auto closed = codimension(k);
      const auto library = tangent_codimension(realize(k, default_assignment(k)));
      const auto reference = oracle::tangent_codim(oracle::realize(oracle::from_structure(k)));
      if (closed != library || closed != reference) {
        out.fail(format_structure(k) + ": formula " + std::to_string(closed) + ", tangent " +
                 std::to_string(library) + ", reference tangent " + std::to_string(reference));
      }
    }
  }
  out.detail = std::to_string(count) + " structures, m,n <= 4";
  return out;
}

// --- criteria 2-4 ------------------------------------------------------------

void absorb(Outcome& out, const VerificationReport& r, std::uint64_t& evaluated) {
  for (const auto& c : r.checks) {
    evaluated += c.evaluated;
    if (!c.passed()) {
      std::string what = std::to_string(r.size.rows) + "x" + std::to_string(r.size.cols) + " " + c.id +
                         ": " + std::to_string(c.violations) + " violations";
      if (c.counterexample && c.counterexample->first) what += " e.g. " + format_structure(*c.counterexample->first);
      if (c.counterexample && c.counterexample->second) what += " / " + format_structure(*c.counterexample->second);
      out.fail(what);
    }
  }
}

Outcome monotonicity_theorem() {
  Outcome out;
  std::uint64_t evaluated = 0;
  std::uint64_t reference_pairs = 0;
  for (auto [m, n] : sizes_up_to(3)) {
    absorb(out, verify_dim_theorem(m, n), evaluated);
    // the same statement, decided and measured by the count-based oracles
    for_each_shared_pair(enumerate_structures(m, n, std::min(m, n)),
                         [&](const KroneckerStructure& l, const KroneckerStructure& mm) {
                           const auto bl = oracle::from_structure(l);
                           const auto bm = oracle::from_structure(mm);
                           if (!oracle::closure(bl, bm)) return;
                           ++reference_pairs;
                           const auto cl = oracle::codim(bl);
                           const auto cm = oracle::codim(bm);
                           if (cl > cm || (cl == cm) != (bl == bm)) {
                             out.fail("reference: " + format_structure(l) + " / " + format_structure(mm));
                           }
                         });
  }
  out.detail = std::to_string(evaluated) + " check evaluations, " + std::to_string(reference_pairs) +
               " reference degenerations, m,n <= 3";
  return out;
}

Outcome cross_validation() {
  Outcome out;
  std::uint64_t evaluated = 0;
  std::uint64_t pairs = 0;
  for (auto [m, n] : sizes_up_to(3)) {
    const auto r = cross_validate_characterizations(m, n);
    pairs += r.pair_count;
    absorb(out, r, evaluated);
  }
  out.detail = std::to_string(pairs) + " ordered pairs, m,n <= 3";
  return out;
}

Outcome per_step() {
  Outcome out;
  std::uint64_t evaluated = 0;
  std::uint64_t rule6 = 0;
  for (auto [m, n] : sizes_up_to(3)) {
    absorb(out, verify_rule_steps(m, n), evaluated);
    for (const auto& k : enumerate_structures(m, n, std::min(m, n))) {
      auto pool = pinned_labels(k);
      for (std::uint32_t id = 50; id < 50 + static_cast<std::uint32_t>(std::min(m, n)); ++id) {
        pool.push_back(EigenvalueLabel::finite(id));
      }
      for (const auto& inst : applicable_instances(k, pool)) {
        const auto next = apply_rule(k, inst);
        const auto before = oracle::from_structure(k);
        const auto after = oracle::from_structure(next);
        if (oracle::codim(after) >= oracle::codim(before)) out.fail("reference codim: " + inst.to_string());
        if (inst.rule == 6) ++rule6;
      }
    }
  }
  out.detail = std::to_string(evaluated) + " rule applications";
  if (rule6 == 0) out.fail("no rule-6 instance was exercised");
  return out;
}

// --- criterion 5 -------------------------------------------------------------

bool non_increasing(const Ints& v, std::int64_t top) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] > top || (i && v[i] > v[i - 1])) return false;
  }
  return true;
}

bool prefix_nonnegative(const Ints& d) {
  std::int64_t s = 0;
  for (auto x : d) {
    if ((s += x) < 0) return false;
  }
  return true;
}

bool prefix_below(const Ints& a, const Ints& b) {
  std::int64_t sa = 0;
  std::int64_t sb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

struct InequalityTally {
  std::uint64_t valid = 0;
  std::uint64_t rejected = 0;
  std::uint64_t equalities = 0;
};

void check_first(const Ints& d, const Ints& delta, Outcome& out, InequalityTally& tally) {
  const bool admissible = non_increasing(delta, 1 << 20) && prefix_nonnegative(d);
  if (!admissible) {
    try {
      weighted_sum_bound(d, delta);
      out.fail("weighted sum accepted inadmissible input");
    } catch (const Error& e) {
      if (e.code() != Errc::precondition_violated) out.fail("weighted sum: wrong error code");
      ++tally.rejected;
    }
    return;
  }
  ++tally.valid;
  const auto r = weighted_sum_bound(d, delta);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) sum += d[i] * delta[i];
  // equality characterization, spelled out directly
  bool pattern = true;
  std::int64_t prefix = 0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    prefix += d[j];
    const auto next = j + 1 < d.size() ? delta[j + 1] : 0;
    if (prefix != 0 && delta[j] != next) pattern = false;
  }
  if (r.sum != sum) out.fail("weighted sum: wrong sum");
  if (sum < 0) out.fail("weighted sum: negative sum");
  if ((sum == 0) != pattern) out.fail("weighted sum: equality pattern differs");
  if (!r.equality_condition_ok) out.fail("weighted sum: characterization reported broken");
  if (sum == 0) ++tally.equalities;
}

void check_second(std::int64_t p, const Ints& alpha, const Ints& beta, Outcome& out, InequalityTally& tally) {
  const bool admissible = non_increasing(alpha, p) && non_increasing(beta, p) && prefix_below(alpha, beta);
  if (!admissible) {
    try {
      square_product_bounds(p, alpha, beta);
      out.fail("square/product bounds accepted inadmissible input");
    } catch (const Error& e) {
      if (e.code() != Errc::precondition_violated) out.fail("square/product bounds: wrong error code");
      ++tally.rejected;
    }
    return;
  }
  ++tally.valid;
  const auto r = square_product_bounds(p, alpha, beta);
  std::int64_t sq_a = 0, sq_b = 0, pr_a = p * alpha[0], pr_b = p * beta[0];
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    sq_a += alpha[i] * alpha[i];
    sq_b += beta[i] * beta[i];
    if (i + 1 < alpha.size()) {
      pr_a += alpha[i] * alpha[i + 1];
      pr_b += beta[i] * beta[i + 1];
    }
  }
  const bool same = alpha == beta;
  if (r.squares.lhs != sq_a || r.squares.rhs != sq_b || r.products.lhs != pr_a || r.products.rhs != pr_b) {
    out.fail("square/product bounds: wrong sides");
  }
  if (sq_a > sq_b || pr_a > pr_b) out.fail("square/product bounds: inequality fails");
  if ((sq_a == sq_b) != same || (pr_a == pr_b) != same) out.fail("square/product bounds: equality not iff equal");
  if (!r.equality_iff_equal_ok) out.fail("square/product bounds: characterization reported broken");
  if (same) ++tally.equalities;
}

// Calls f on every vector of length k with entries in [lo, hi].
void every_vector(std::size_t k, std::int64_t lo, std::int64_t hi, const std::function<void(const Ints&)>& f) {
  Ints v(k, lo);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < k && v[i] == hi) v[i++] = lo;
    if (i == k) return;
    ++v[i];
  }
}

Ints random_non_increasing(std::mt19937_64& rng, std::size_t k, std::int64_t top) {
  Ints v(k);
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(top + 1));
  std::sort(v.rbegin(), v.rend());
  return v;
}

Outcome lemma_suites() {
  Outcome out;
  InequalityTally first;
  InequalityTally second;
  for (std::size_t k = 1; k <= 4; ++k) {
    every_vector(k, 0, 4, [&](const Ints& delta) {
      every_vector(k, -4, 4, [&](const Ints& d) { check_first(d, delta, out, first); });
    });
    for (std::int64_t p = 0; p <= 4; ++p) {
      every_vector(k, 0, 4, [&](const Ints& alpha) {
        every_vector(k, 0, 4, [&](const Ints& beta) { check_second(p, alpha, beta, out, second); });
      });
    }
  }
  const auto exhaustive_first = first.valid;
  const auto exhaustive_second = second.valid;

  std::mt19937_64 rng(2024);
  for (int sample = 0; sample < 100000; ++sample) {
    const std::size_t k = 1 + rng() % 8;
    const auto delta = random_non_increasing(rng, k, 8);
    Ints d(k);
    std::int64_t prefix = 0;
    for (auto& x : d) {
      const std::int64_t low = -std::min<std::int64_t>(8, prefix);
      x = low + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(8 - low + 1));
      if (rng() % 4 == 0) x = low;  // drive prefix sums to zero often
      prefix += x;
    }
    check_first(d, delta, out, first);

    const std::int64_t p = static_cast<std::int64_t>(rng() % 9);
    Ints beta = random_non_increasing(rng, k, p);
    Ints alpha = random_non_increasing(rng, k, p);
    if (!prefix_below(alpha, beta)) {
      if (rng() % 2) {
        for (std::size_t i = 0; i < k; ++i) alpha[i] = std::min(alpha[i], beta[i]);
      } else if (rng() % 2) {
        alpha = beta;
      } else {
        std::swap(alpha, beta);
      }
    }
    if (prefix_below(alpha, beta)) check_second(p, alpha, beta, out, second);
  }

  out.detail = "exhaustive " + std::to_string(exhaustive_first) + " + " + std::to_string(exhaustive_second) +
               " admissible inputs, random " + std::to_string(first.valid - exhaustive_first) + " + " +
               std::to_string(second.valid - exhaustive_second) + ", equalities " +
               std::to_string(first.equalities) + " / " + std::to_string(second.equalities);
  if (first.rejected == 0 || second.rejected == 0) out.fail("preconditions were never exercised");
  return out;
}

// --- criterion 6 -------------------------------------------------------------

oracle::Pencil to_oracle(const RationalPencil& p) {
  oracle::Pencil out{oracle::zeros(static_cast<int>(p.rows()), static_cast<int>(p.cols())),
                     oracle::zeros(static_cast<int>(p.rows()), static_cast<int>(p.cols()))};
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) {
      out.a[i][j] = p.a(i, j);
      out.b[i][j] = p.b(i, j);
    }
  }
  return out;
}

int reference_normal_rank(const oracle::Pencil& p) {
  const int samples = static_cast<int>(std::min(p.a.size(), p.a.empty() ? 0 : p.a[0].size())) + 1;
  int best = 0;
  for (int t = 0; t < samples; ++t) {
    oracle::Matrix at = p.a;
    for (std::size_t i = 0; i < at.size(); ++i) {
      for (std::size_t j = 0; j < at[i].size(); ++j) at[i][j] += t * p.b[i][j];
    }
    best = std::max(best, oracle::rank(at));
  }
  return best;
}

Outcome invariance() {
  Outcome out;
  std::size_t count = 0;
  std::size_t moved = 0;
  for (auto [m, n] : sizes_up_to(3)) {
    for (const auto& k : enumerate_structures(m, n, std::min(m, n))) {
      const auto base = realize(k, default_assignment(k));
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ++count;
        const auto q = random_equivalence(base, seed);
        if (!(q == base)) ++moved;
        const auto reference = to_oracle(q);
        if (oracle::tangent_codim(reference) != codimension(k) || tangent_codimension(q) != codimension(k)) {
          out.fail(format_structure(k) + " seed " + std::to_string(seed) + ": codimension changed");
        }
        if (reference_normal_rank(reference) != rank_of(k) || normal_rank(q) != rank_of(k)) {
          out.fail(format_structure(k) + " seed " + std::to_string(seed) + ": rank changed");
        }
      }
    }
  }
  out.detail = std::to_string(count) + " transformed pencils (" + std::to_string(moved) + " differ from the input)";
  if (moved * 2 < count) out.fail("most transformations were trivial");
  return out;
}

// --- criterion 7 -------------------------------------------------------------

Outcome worked_examples() {
  Outcome out;
  const std::vector<std::pair<const char*, std::int64_t>> codims = {
      {"L(0) + LT(0)", 2}, {"J(1;e1)", 1}, {"L(1)", 0}, {"J(3;e1)", 3}, {"J(2;e1) + J(1;e1)", 5}};
  for (const auto& [text, pinned] : codims) {
    const auto k = S(text);
    const auto reference = oracle::tangent_codim(oracle::realize(oracle::from_structure(k)));
    if (reference != pinned) out.fail(std::string(text) + ": reference tangent disagrees with pinned value");
    if (codimension(k) != pinned) out.fail(std::string(text) + ": codimension " + std::to_string(codimension(k)));
  }

  struct Decision {
    const char* l;
    const char* m;
    bool pinned;
  };
  const std::vector<Decision> decisions = {{"J(1;e1)", "L(0) + LT(0)", true},
                                           {"L(0) + LT(0)", "J(1;e1)", false},
                                           {"L(1) + L(1)", "L(0) + L(2)", true},
                                           {"L(0) + L(2)", "L(1) + L(1)", false}};
  for (const auto& d : decisions) {
    const auto l = S(d.l);
    const auto m = S(d.m);
    const bool rules = reachable(m, l, false).has_value();
    const bool reference = oracle::closure(oracle::from_structure(l), oracle::from_structure(m));
    if (rules != d.pinned || reference != d.pinned) out.fail(std::string(d.l) + " / " + d.m + ": oracles disagree");
    if (degenerates_to(l, m) != d.pinned) out.fail(std::string(d.l) + " / " + d.m + ": wrong decision");
  }

  struct OneStep {
    const char* from;
    const char* to;
    RuleInstance step;
  };
  const auto e1 = EigenvalueLabel::finite(1);
  const std::vector<OneStep> paths = {{"L(0) + LT(0)", "J(1;e1)", RuleInstance::merge(0, 0, {{1, e1}})},
                                      {"J(2;e1) + J(1;e1)", "J(3;e1)", RuleInstance::jordan_shift(1, 2, e1)}};
  for (const auto& p : paths) {
    const auto from = S(p.from);
    const auto to = S(p.to);
    // reference: the block swap written out by hand
    oracle::Blocks expected = oracle::from_structure(to);
    if (oracle::from_structure(apply_rule(from, p.step)) != expected) out.fail(std::string(p.from) + ": step result");
    for (bool prune : {false, true}) {
      const auto found = reachable(from, to, prune);
      if (!found || found->size() != 1 || (*found)[0] != p.step) {
        out.fail(std::string(p.from) + " -> " + p.to + ": path differs from the pinned single step");
      }
    }
  }
  if (reachable(S("J(3;e1)"), S("J(2;e1) + J(1;e1)"), false)) out.fail("J(3;e1) must not reach J(2;e1) + J(1;e1)");
  out.detail = "5 codimensions, 4 closure decisions, 2 one-step paths";
  return out;
}

// --- criterion 8 -------------------------------------------------------------

struct Run {
  int status = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::string& program, const std::vector<std::string>& args, const std::string& env = "") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += quote(program);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct Golden {
  const char* file;
  std::vector<std::string> args;
};

const std::vector<Golden>& golden_files() {
  static const std::vector<Golden> files = {
      {"codim_zero_1x1.json", {"codim", "L(0) + LT(0)", "--json"}},
      {"closure_1x1.json", {"closure", "J(1;e1)", "L(0) + LT(0)", "--json"}},
      {"closure_2x4.json", {"closure", "L(1) + L(1)", "L(0) + L(2)", "--json"}},
      {"path_rule6.json", {"path", "L(0) + LT(0)", "J(1;e1)", "--json"}},
      {"path_rule5.json", {"path", "J(2;e1) + J(1;e1)", "J(3;e1)", "--json"}},
      {"enumerate_2x2.json", {"enumerate", "2", "2", "--json"}},
      {"graph_2x2.json", {"graph", "2", "2", "--json"}},
      {"realize_j1_e1_5.json", {"realize", "J(1;e1)", "--assign", "e1=5", "--json"}},
      {"realize_mixed.json", {"realize", "J(2;e1) + L(1) + LT(0)", "--assign", "e1=-1/2", "--json"}},
      {"verify_2x2.json", {"verify", "2", "2", "--json"}},
  };
  return files;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli_contract(const Settings& settings) {
  Outcome out;
  if (settings.cli.empty()) {
    out.fail("no --cli given");
    return out;
  }

  std::size_t round_trips = 0;
  for (auto [m, n] : sizes_up_to(4)) {
    for (const auto& k : enumerate_structures(m, n, std::min(m, n))) {
      ++round_trips;
      if (parse_structure(format_structure(k)) != k) out.fail("round trip: " + format_structure(k));
    }
  }

  std::size_t graphs = 0;
  for (auto [m, n] : sizes_up_to(3)) {
    const auto r = run(settings.cli, {"graph", std::to_string(m), std::to_string(n), "--dot"});
    std::string error;
    const auto parsed = dot::parse(r.out, &error);
    if (r.status != 0 || !parsed || !parsed->directed) {
      out.fail("graph " + std::to_string(m) + "x" + std::to_string(n) + ": invalid DOT " + error);
      continue;
    }
    const auto g = build_closure_graph(enumerate_structures(m, n, std::min(m, n)));
    std::set<std::pair<std::string, std::string>> expected;
    for (const auto& [i, j] : g.edges) expected.emplace("n" + std::to_string(i), "n" + std::to_string(j));
    const std::set<std::pair<std::string, std::string>> got(parsed->edges.begin(), parsed->edges.end());
    if (got != expected || got.size() != parsed->edges.size()) {
      out.fail("graph " + std::to_string(m) + "x" + std::to_string(n) + ": edge set differs");
    }
    if (parsed->nodes.size() != g.nodes.size()) out.fail("graph node count differs");
    ++graphs;
  }
  for (const char* broken : {"digraph { a -> }", "digraph { a -- b }", "digraph { a [label=] }", "graph {"}) {
    if (dot::parse(broken)) out.fail(std::string("DOT checker accepted: ") + broken);
  }

  struct Expect {
    std::vector<std::string> args;
    int status;
    std::string env;
    const char* stdout_text;
  };
  const std::vector<Expect> expectations = {
      {{"codim", "L(0) + LT(0)"}, 0, "", "codim=2 dim=0\n"},
      {{"codim", "J(2;e1) + J(1;e1)"}, 0, "", "codim=5 dim=13\n"},
      {{"closure", "J(1;e1)", "L(0) + LT(0)"}, 0, "", nullptr},
      {{"closure", "L(0) + LT(0)", "J(1;e1)"}, 3, "", nullptr},
      {{"closure", "L(1) + L(1)", "L(0) + L(2)"}, 0, "", nullptr},
      {{"closure", "L(0) + L(2)", "L(1) + L(1)"}, 3, "", nullptr},
      {{"path", "J(2;e1) + J(1;e1)", "J(3;e1)"}, 0, "", nullptr},
      {{"path", "J(3;e1)", "J(2;e1) + J(1;e1)", "--no-prune"}, 3, "", "unreachable\n"},
      {{"tangent-codim", "J(2;e1) + L(1)"}, 0, "", nullptr},
      {{"tangent-codim", "J(2;e1) + L(1)", "--seed", "4"}, 0, "", nullptr},
      {{"verify", "2", "2"}, 0, "", nullptr},
      {{"verify", "2", "2", "--checks", "formulas", "--seed", "9"}, 0, "", nullptr},
      {{"codim", "J(0;e1)"}, 65, "", nullptr},
      {{"codim", "J(1;e1) + Q(2)"}, 65, "", nullptr},
      {{"closure", "J(1;e1)", "L(1)"}, 65, "", nullptr},
      {{"realize", "J(1;e1) + J(1;e2)", "--assign", "e1=1,e2=1"}, 65, "", nullptr},
      {{}, 64, "", nullptr},
      {{"codim"}, 64, "", nullptr},
      {{"frobnicate"}, 64, "", nullptr},
      {{"verify", "2", "2", "--checks", "everything"}, 64, "", nullptr},
      {{"verify", "0", "2"}, 64, "", nullptr},
      {{"graph", "2", "2", "--dot", "--json"}, 64, "", nullptr},
      {{"verify", "2", "2"}, 70, "KCF_MAX_PAIRS=10", nullptr},
      {{"graph", "2", "2"}, 70, "KCF_MAX_PAIRS=10", nullptr},
      {{"--help"}, 0, "", nullptr},
  };
  for (const auto& e : expectations) {
    const auto r = run(settings.cli, e.args, e.env);
    std::string shown;
    for (const auto& a : e.args) shown += " " + a;
    if (r.status != e.status) {
      out.fail("kcf" + shown + ": exit " + std::to_string(r.status) + ", expected " + std::to_string(e.status));
    }
    if (e.stdout_text && r.out != e.stdout_text) out.fail("kcf" + shown + ": output '" + r.out + "'");
  }

  if (!settings.faulty_cli.empty()) {
    const auto a = run(settings.faulty_cli, {"verify", "2", "2", "--json"});
    const auto b = run(settings.faulty_cli, {"verify", "2", "2", "--json"});
    if (a.status != 2 || b.status != 2 || a.out != b.out) out.fail("fault-injected verify must exit 2 reproducibly");
    if (a.out.find("\"counterexample\": {") == std::string::npos) out.fail("fault-injected report lacks a counterexample");
    if (run(settings.faulty_cli, {"tangent-codim", "L(1)"}).status != 2) out.fail("fault-injected tangent-codim must exit 2");
    if (run(settings.faulty_cli, {"verify", "1", "1", "--checks", "dim"}).status != 0) {
      out.fail("fault at 1x1 should not disturb the dim suite");
    }
  } else {
    out.fail("no --faulty-cli given");
  }

  std::size_t goldens = 0;
  for (const auto& g : golden_files()) {
    const auto first = run(settings.cli, g.args);
    const auto second = run(settings.cli, g.args);
    const auto path = settings.golden / g.file;
    if (first.status != 0 || first.out != second.out) {
      out.fail(std::string(g.file) + ": output not stable across runs");
      continue;
    }
    if (settings.update_golden) {
      std::ofstream(path, std::ios::binary) << first.out;
    } else if (!std::filesystem::exists(path)) {
      out.fail(std::string(g.file) + ": golden file missing");
      continue;
    } else if (read_file(path) != first.out) {
      out.fail(std::string(g.file) + ": differs from golden file");
      continue;
    }
    ++goldens;
  }

  out.detail = std::to_string(round_trips) + " round trips, " + std::to_string(graphs) + " DOT graphs, " +
               std::to_string(expectations.size()) + " exit-code cases, " + std::to_string(goldens) +
               " golden files";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  Settings settings;
  std::string golden = ".";
  std::vector<int> only;
  app.add_option("--cli", settings.cli, "path to the kcf binary");
  app.add_option("--faulty-cli", settings.faulty_cli, "path to the fault-injected kcf binary");
  app.add_option("--golden", golden, "directory holding golden files");
  app.add_flag("--update-golden", settings.update_golden, "rewrite golden files");
  app.add_option("--only", only, "run only these criteria");
  CLI11_PARSE(app, argc, argv);
  settings.golden = golden;

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"formula codimension equals tangent corank", formula_vs_tangent},
      {"closure implies codimension inequality, equality iff same orbit", monotonicity_theorem},
      {"majorization test agrees with prune-free rule reachability", cross_validation},
      {"every rule step lowers codimension, keeps size, rank as specified", per_step},
      {"sequence lemma suites", lemma_suites},
      {"invariance under 20 random strict equivalences", invariance},
      {"worked-example regression", worked_examples},
      {"command-line contract", [&] { return cli_contract(settings); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), number) == only.end()) continue;
    const auto started = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << criteria[i].first
              << " (" << outcome.detail << "; " << std::fixed << std::setprecision(2) << seconds << " s)\n";
    for (const auto& f : outcome.failures) std::cout << "       " << f << "\n";
    if (!outcome.pass) ++failed;
  }
  return failed;
}
