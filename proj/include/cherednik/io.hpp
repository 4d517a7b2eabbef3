#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cherednik/homspaces.hpp"
#include "cherednik/labels.hpp"
#include "cherednik/standard_module.hpp"

namespace cherednik {

using nlohmann::json;

/// Failure to load a parameter file.
struct ParamsError : std::runtime_error {
  enum class Kind { SumNonZero, BadRational, BadArity, BadFormat, Io };
  Kind kind;
  ParamsError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

std::string params_error_name(ParamsError::Kind kind);

/// {"r": 3, "c0": "1", "d": ["5", "0", "-5"]}
ParamsPtr params_from_json(const json& j);
ParamsPtr load_params(const std::filesystem::path& path);
json to_json(const Params& p);

/// "a,b" or "a,b,s": diag(zeta^a, zeta^b), optionally times the transposition.
GroupElement parse_group_element(const std::string& text, int r);

json to_json(const ModElem& e);
/// Inverse of to_json(ModElem); only the "label" and "terms" fields are read.
ModElem mod_elem_from_json(const ParamsPtr& p, const json& j);

json to_json(const AtomResult& a);
json to_json(const RuleEvaluation& ev);
json to_json(const ConditionReport& rep);
json to_json(const HomMap& h);
json to_json(const DiagramEdge& e);
json to_json(const MorphismDiagram& d, bool reduced_only);

}  // namespace cherednik
