#pragma once

// JSON and DOT serialization. Key order is fixed so output can be diffed
// against stored files.

#include <string>
#include <vector>

#include "json.hpp"

#include "kcf/closure.hpp"
#include "kcf/pencil.hpp"
#include "kcf/rules.hpp"
#include "kcf/structure.hpp"
#include "kcf/verifier.hpp"

namespace kcf {

using Json = nlohmann::ordered_json;

// {"jordan":[{"eig":"e1","size":3}],"right":[2],"left":[0]}
Json to_json(const KroneckerStructure& k);

// Throws Errc::parse_error on a malformed document.
KroneckerStructure structure_from_json(const Json& j);

Json to_json(const RuleInstance& inst);
Json to_json(const DegenerationWitness& w);
Json to_json(const RationalMatrix& m);  // rows of "num/den" strings
Json to_json(const RationalPencil& p);
Json to_json(const ClosureGraph& g);
Json to_json(const VerificationReport& report, bool with_timing = false);

std::string to_dot(const ClosureGraph& g);

// One line per check, then an overall line.
std::string summary_table(const VerificationReport& report);

}  // namespace kcf
