#include "kcf/io.hpp"

#include <sstream>

#include "kcf/error.hpp"
#include "kcf/notation.hpp"

namespace kcf {

Json to_json(const KroneckerStructure& k) {
  Json jordan = Json::array();
  for (const auto& b : k.jordan()) {
    jordan.push_back(Json{{"eig", b.eigenvalue.to_string()}, {"size", b.size}});
  }
  return Json{{"jordan", jordan}, {"right", k.right()}, {"left", k.left()}};
}

KroneckerStructure structure_from_json(const Json& j) {
  try {
    std::vector<JordanBlock> jordan;
    for (const auto& b : j.at("jordan")) {
      jordan.push_back({parse_label(b.at("eig").get<std::string>()), b.at("size").get<int>()});
    }
    return KroneckerStructure(std::move(jordan), j.at("right").get<std::vector<int>>(),
                              j.at("left").get<std::vector<int>>());
  } catch (const Json::exception& e) {
    throw ParseError(0, "structure object", std::string("bad structure JSON: ") + e.what());
  }
}

Json to_json(const RuleInstance& inst) {
  Json out{{"rule", inst.rule}};
  if (inst.rule == 6) {
    out["p"] = inst.p;
    out["q"] = inst.q;
    Json parts = Json::array();
    for (const auto& part : inst.parts) {
      parts.push_back(Json{{"eig", part.eigenvalue.to_string()}, {"size", part.size}});
    }
    out["parts"] = parts;
  } else {
    out["j"] = inst.j;
    out["k"] = inst.k;
    if (inst.rule >= 3) out["eig"] = inst.mu.to_string();
  }
  return out;
}

Json to_json(const DegenerationWitness& w) {
  Json conditions = Json::array();
  for (const auto& c : w.conditions) {
    conditions.push_back(Json{{"condition", c.condition},
                              {"lower", c.lower.values()},
                              {"upper", c.upper.values()},
                              {"shift", c.shift},
                              {"lower_partial_sums", c.lower_partial_sums},
                              {"upper_partial_sums", c.upper_partial_sums},
                              {"holds", c.holds}});
  }
  return Json{{"rank_l", w.rank_l},
              {"rank_m", w.rank_m},
              {"h", w.h},
              {"conditions", conditions},
              {"holds", w.holds}};
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& x = m(r, c);
      row.push_back(x.get_num().get_str() + "/" + x.get_den().get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const RationalPencil& p) {
  return Json{{"rows", p.rows()}, {"cols", p.cols()}, {"A", to_json(p.a)}, {"B", to_json(p.b)}};
}

Json to_json(const ClosureGraph& g) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    nodes.push_back(Json{{"id", i},
                         {"notation", format_structure(g.nodes[i])},
                         {"structure", to_json(g.nodes[i])},
                         {"codim", g.codimensions[i]}});
  }
  Json edges = Json::array();
  for (const auto& [from, to] : g.edges) edges.push_back(Json{{"from", from}, {"to", to}});
  return Json{{"nodes", nodes}, {"edges", edges}};
}

Json to_json(const VerificationReport& report, bool with_timing) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"check_id", c.id},
               {"passed", c.passed()},
               {"evaluated", c.evaluated},
               {"violations", c.violations}};
    if (c.counterexample) {
      Json cx = Json::object();
      if (c.counterexample->first) cx["first"] = format_structure(*c.counterexample->first);
      if (c.counterexample->second) cx["second"] = format_structure(*c.counterexample->second);
      Json diagnostics = Json::object();
      for (const auto& [key, value] : c.counterexample->diagnostics) diagnostics[key] = value;
      cx["diagnostics"] = diagnostics;
      entry["counterexample"] = cx;
    } else {
      entry["counterexample"] = nullptr;
    }
    checks.push_back(entry);
  }
  Json out{{"size", Json{{"m", report.size.rows}, {"n", report.size.cols}}},
           {"node_count", report.node_count},
           {"pair_count", report.pair_count},
           {"checks", checks},
           {"passed", report.passed()}};
  if (with_timing) out["elapsed_ms"] = report.elapsed.count();
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const ClosureGraph& g) {
  std::ostringstream out;
  out << "digraph closure {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(format_structure(g.nodes[i]))
        << "\\ncodim=" << g.codimensions[i] << "\"];\n";
  }
  for (const auto& [from, to] : g.edges) out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

std::string summary_table(const VerificationReport& report) {
  std::ostringstream out;
  out << "size " << report.size.rows << "x" << report.size.cols << ": " << report.node_count
      << " nodes, " << report.pair_count << " pairs\n";
  for (const auto& c : report.checks) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.id << "  evaluated=" << c.evaluated
        << " violations=" << c.violations << "\n";
    if (c.counterexample) {
      if (c.counterexample->first) out << "    first:  " << format_structure(*c.counterexample->first) << "\n";
      if (c.counterexample->second) out << "    second: " << format_structure(*c.counterexample->second) << "\n";
      for (const auto& [key, value] : c.counterexample->diagnostics) {
        out << "    " << key << " = " << value << "\n";
      }
    }
  }
  out << (report.passed() ? "all checks passed" : "violations found") << "\n";
  return out.str();
}

}  // namespace kcf
