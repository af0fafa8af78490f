// kcf: orbit-closure computations on Kronecker structures of matrix pencils.
//
// Exit codes: 0 ok, 2 verification failure, 3 negative answer, 64 usage,
// 65 bad input, 70 guard limit hit.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kcf/closure.hpp"
#include "kcf/error.hpp"
#include "kcf/io.hpp"
#include "kcf/notation.hpp"
#include "kcf/pencil.hpp"
#include "kcf/rules.hpp"
#include "kcf/verifier.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 2;
constexpr int kNegative = 3;
constexpr int kUsage = 64;
constexpr int kDataError = 65;
constexpr int kLimit = 70;

int exit_code_for(kcf::Errc code) {
  switch (code) {
    case kcf::Errc::invalid_size:
      return kUsage;
    case kcf::Errc::enumeration_limit_exceeded:
    case kcf::Errc::search_budget_exceeded:
      return kLimit;
    default:
      return kDataError;
  }
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

kcf::EigenvalueAssignment parse_assignment(const std::string& text, const kcf::KroneckerStructure& k) {
  auto out = kcf::default_assignment(k);
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw kcf::ParseError(0, "label=value", "bad --assign entry '" + item + "'");
    }
    const auto label = kcf::parse_label(item.substr(0, eq));
    if (label.is_infinity()) {
      throw kcf::Error(kcf::Errc::bad_parameters, "infinity cannot be assigned a value");
    }
    kcf::Rational value;
    if (value.set_str(item.substr(eq + 1), 10) != 0) {
      throw kcf::ParseError(eq + 1, "rational number", "bad value in --assign entry '" + item + "'");
    }
    value.canonicalize();
    out[label] = value;
  }
  return out;
}

void print_matrix(const kcf::RationalMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::cout << " ";
    for (std::size_t c = 0; c < m.cols(); ++c) std::cout << " " << m(r, c).get_str();
    std::cout << "\n";
  }
}

kcf::VerifyOptions options_from_env() {
  kcf::VerifyOptions options;
  if (const char* limit = std::getenv("KCF_MAX_PAIRS"); limit && *limit) {
    char* end = nullptr;
    const auto value = std::strtoull(limit, &end, 10);
    if (*end != '\0') throw kcf::Error(kcf::Errc::bad_parameters, "KCF_MAX_PAIRS must be an integer");
    options.max_pairs = value;
  }
#ifdef KCF_INJECT_FAULT
  options.inject_fault = true;
#endif
  return options;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit-closure computations for Kronecker structures of matrix pencils.\n"
               "Structures use the notation  J(size;e1) + J(size;inf) + L(size) + LT(size).\n"
               "Exit codes: 0 ok, 2 verification failure or oracle mismatch, 3 negative answer,\n"
               "64 usage error, 65 parse or data error, 70 guard limit exceeded.\n"
               "KCF_MAX_PAIRS overrides the enumeration pair limit (default 10000000)."};
  app.require_subcommand(1);

  std::string text_a;
  std::string text_b;
  bool json = false;
  int rows = 0;
  int cols = 0;
  std::optional<int> pool;
  bool no_infinity = false;

  auto* codim_cmd = app.add_subcommand("codim", "codimension and orbit dimension");
  codim_cmd->add_option("structure", text_a)->required();
  codim_cmd->add_flag("--json", json);

  auto* closure_cmd = app.add_subcommand("closure", "is M in the closure of the orbit of L (exit 0 yes, 3 no)");
  closure_cmd->add_option("L", text_a)->required();
  closure_cmd->add_option("M", text_b)->required();
  closure_cmd->add_flag("--json", json);

  bool no_prune = false;
  auto* path_cmd = app.add_subcommand("path", "rule sequence turning M into L (exit 0 found, 3 unreachable)");
  path_cmd->add_option("M", text_a)->required();
  path_cmd->add_option("L", text_b)->required();
  path_cmd->add_flag("--no-prune", no_prune, "search without the majorization filter");
  path_cmd->add_flag("--json", json);

  auto* enum_cmd = app.add_subcommand("enumerate", "canonical structures of size m x n");
  auto* graph_cmd = app.add_subcommand("graph", "closure Hasse diagram of size m x n");
  for (auto* cmd : {enum_cmd, graph_cmd}) {
    cmd->add_option("m", rows)->required();
    cmd->add_option("n", cols)->required();
    cmd->add_option("--pool", pool, "number of finite eigenvalue labels (default min(m,n))");
    cmd->add_flag("--no-infinity", no_infinity, "exclude the infinite eigenvalue");
  }
  enum_cmd->add_flag("--json", json);
  bool dot = false;
  auto* graph_format = graph_cmd->add_option_group("format");
  graph_format->add_flag("--dot", dot, "Graphviz output (default)");
  graph_format->add_flag("--json", json);
  graph_format->require_option(0, 1);

  std::string checks = "dim,rules,formulas";
  std::uint64_t seed = 0;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive checks (exit 0 pass, 2 violation)");
  verify_cmd->add_option("m", rows)->required();
  verify_cmd->add_option("n", cols)->required();
  verify_cmd->add_option("--checks", checks, "comma list of dim, rules, formulas")->capture_default_str();
  verify_cmd->add_option("--pool", pool, "number of finite eigenvalue labels (default min(m,n))");
  verify_cmd->add_option("--seed", seed, "first equivalence seed")->capture_default_str();
  verify_cmd->add_flag("--json", json);
  verify_cmd->add_flag("--timing", timing, "include elapsed time");

  std::string assign;
  auto* realize_cmd = app.add_subcommand("realize", "explicit pencil A + lambda B");
  realize_cmd->add_option("structure", text_a)->required();
  realize_cmd->add_option("--assign", assign, "eigenvalue values, e.g. e1=5,e2=-1/2 (default e_i=i)");
  realize_cmd->add_flag("--json", json);

  std::optional<std::uint64_t> tangent_seed;
  auto* tangent_cmd = app.add_subcommand("tangent-codim", "tangent-space codimension vs closed form (exit 2 on mismatch)");
  tangent_cmd->add_option("structure", text_a)->required();
  tangent_cmd->add_option("--assign", assign, "eigenvalue values, e.g. e1=5,e2=-1/2");
  tangent_cmd->add_option("--seed", tangent_seed, "apply a random strict equivalence first");
  tangent_cmd->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*codim_cmd) {
      const auto k = kcf::parse_structure(text_a);
      const auto c = kcf::codimension(k);
      const auto d = kcf::orbit_dimension(k);
      if (json) {
        std::cout << kcf::Json{{"structure", kcf::to_json(k)}, {"codim", c}, {"dim", d}}.dump(2) << "\n";
      } else {
        std::cout << "codim=" << c << " dim=" << d << "\n";
      }
      return kOk;
    }

    if (*closure_cmd) {
      const auto l = kcf::parse_structure(text_a);
      const auto m = kcf::parse_structure(text_b);
      const auto w = kcf::explain_degeneration(l, m);
      if (json) {
        std::cout << kcf::to_json(w).dump(2) << "\n";
      } else {
        std::cout << (w.holds ? "yes" : "no") << "\n";
        std::cout << "rank L=" << w.rank_l << " rank M=" << w.rank_m << " h=" << w.h << "\n";
        if (w.h < 0) std::cout << "rank M exceeds rank L\n";
        for (const auto& c : w.conditions) {
          std::cout << c.condition << ": " << c.lower.to_string() << " <=w " << c.upper.to_string()
                    << " + " << c.shift << "  partial sums " << join(c.lower_partial_sums)
                    << " vs " << join(c.upper_partial_sums) << "  " << (c.holds ? "ok" : "fails")
                    << "\n";
        }
      }
      return w.holds ? kOk : kNegative;
    }

    if (*path_cmd) {
      const auto m = kcf::parse_structure(text_a);
      const auto l = kcf::parse_structure(text_b);
      const auto steps = kcf::reachable(m, l, !no_prune);
      if (json) {
        kcf::Json out{{"from", kcf::to_json(m)}, {"to", kcf::to_json(l)}, {"reachable", steps.has_value()}};
        kcf::Json list = kcf::Json::array();
        if (steps) {
          auto current = m;
          for (const auto& s : *steps) {
            current = kcf::apply_rule(current, s);
            list.push_back(kcf::Json{{"step", kcf::to_json(s)}, {"result", kcf::format_structure(current)}});
          }
        }
        out["steps"] = list;
        std::cout << out.dump(2) << "\n";
      } else if (!steps) {
        std::cout << "unreachable\n";
      } else {
        auto current = m;
        std::cout << kcf::format_structure(current) << "\n";
        for (const auto& s : *steps) {
          current = kcf::apply_rule(current, s);
          std::cout << "  " << s.to_string() << " -> " << kcf::format_structure(current) << "\n";
        }
      }
      return steps ? kOk : kNegative;
    }

    if (*enum_cmd || *graph_cmd) {
      auto nodes = kcf::enumerate_structures(rows, cols, pool.value_or(std::min(rows, cols)), !no_infinity);
      if (*enum_cmd) {
        if (json) {
          kcf::Json list = kcf::Json::array();
          for (const auto& k : nodes) {
            list.push_back(kcf::Json{{"notation", kcf::format_structure(k)},
                                     {"structure", kcf::to_json(k)},
                                     {"codim", kcf::codimension(k)}});
          }
          std::cout << kcf::Json{{"m", rows}, {"n", cols}, {"count", nodes.size()}, {"structures", list}}.dump(2)
                    << "\n";
        } else {
          for (const auto& k : nodes) {
            std::cout << kcf::codimension(k) << "\t" << kcf::format_structure(k) << "\n";
          }
        }
        return kOk;
      }
      const auto options = options_from_env();
      if (static_cast<std::uint64_t>(nodes.size()) * nodes.size() > options.max_pairs) {
        throw kcf::Error(kcf::Errc::enumeration_limit_exceeded, "graph exceeds the pair limit");
      }
      const auto g = kcf::build_closure_graph(std::move(nodes));
      if (json) {
        std::cout << kcf::to_json(g).dump(2) << "\n";
      } else {
        std::cout << kcf::to_dot(g);
      }
      return kOk;
    }

    if (*verify_cmd) {
      auto options = options_from_env();
      options.pool_size = pool;
      options.seed = seed;
      std::vector<kcf::VerificationReport> reports;
      std::stringstream list(checks);
      std::string suite;
      while (std::getline(list, suite, ',')) {
        if (suite == "dim") {
          reports.push_back(kcf::verify_dim_theorem(rows, cols, options));
        } else if (suite == "rules") {
          reports.push_back(kcf::cross_validate_characterizations(rows, cols, options));
          reports.push_back(kcf::verify_rule_steps(rows, cols, options));
        } else if (suite == "formulas") {
          reports.push_back(kcf::verify_formula_identities(rows, cols, options));
        } else {
          std::cerr << "unknown check suite '" << suite << "' (expected dim, rules, formulas)\n";
          return kUsage;
        }
      }
      bool passed = true;
      for (const auto& r : reports) passed = passed && r.passed();
      if (json) {
        kcf::Json out = kcf::Json::array();
        for (const auto& r : reports) out.push_back(kcf::to_json(r, timing));
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& r : reports) {
          std::cout << kcf::summary_table(r);
          if (timing) std::cout << "elapsed " << r.elapsed.count() << " ms\n";
        }
      }
      return passed ? kOk : kViolation;
    }

    if (*realize_cmd) {
      const auto k = kcf::parse_structure(text_a);
      const auto p = kcf::realize(k, parse_assignment(assign, k));
      if (json) {
        std::cout << kcf::Json{{"structure", kcf::to_json(k)}, {"pencil", kcf::to_json(p)}}.dump(2) << "\n";
      } else {
        std::cout << "A (" << p.rows() << "x" << p.cols() << "):\n";
        print_matrix(p.a);
        std::cout << "B (" << p.rows() << "x" << p.cols() << "):\n";
        print_matrix(p.b);
      }
      return kOk;
    }

    if (*tangent_cmd) {
      const auto k = kcf::parse_structure(text_a);
      auto p = kcf::realize(k, parse_assignment(assign, k));
      if (tangent_seed) p = kcf::random_equivalence(p, *tangent_seed);
      const auto oracle = kcf::tangent_codimension(p);
      auto closed = kcf::codimension(k);
#ifdef KCF_INJECT_FAULT
      if (k.jordan().empty()) ++closed;
#endif
      if (json) {
        std::cout << kcf::Json{{"tangent_codim", oracle}, {"codim", closed}, {"match", oracle == closed}}.dump(2)
                  << "\n";
      } else {
        std::cout << "tangent=" << oracle << " codim=" << closed << (oracle == closed ? "" : " MISMATCH")
                  << "\n";
      }
      return oracle == closed ? kOk : kViolation;
    }
  } catch (const kcf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const kcf::Error& e) {
    std::cerr << "error [" << kcf::errc_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}
