#include "cherednik/io.hpp"

#include <charconv>
#include <fstream>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

Rational rational_field(const json& j, const std::string& what) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const BadRational& e) {
    throw ParamsError(ParamsError::Kind::BadRational, what + ": " + e.what());
  }
  throw ParamsError(ParamsError::Kind::BadRational, what + ": expected a \"p/q\" string");
}

int parse_int(const std::string& text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("bad integer '" + text + "'");
  return v;
}

}  // namespace

std::string params_error_name(ParamsError::Kind kind) {
  switch (kind) {
    case ParamsError::Kind::SumNonZero: return "SumNonZero";
    case ParamsError::Kind::BadRational: return "BadRational";
    case ParamsError::Kind::BadArity: return "BadArity";
    case ParamsError::Kind::BadFormat: return "BadFormat";
    case ParamsError::Kind::Io: return "Io";
  }
  return "?";
}

ParamsPtr params_from_json(const json& j) {
  using K = ParamsError::Kind;
  if (!j.is_object() || !j.contains("r") || !j.contains("c0") || !j.contains("d"))
    throw ParamsError(K::BadFormat, "parameter file needs fields r, c0, d");
  if (!j["r"].is_number_integer() || j["r"].get<long>() < 1)
    throw ParamsError(K::BadFormat, "r must be a positive integer");
  const int r = j["r"].get<int>();
  const Rational c0 = rational_field(j["c0"], "c0");
  if (!j["d"].is_array()) throw ParamsError(K::BadFormat, "d must be an array");
  if (static_cast<int>(j["d"].size()) != r)
    throw ParamsError(K::BadArity, "d has " + std::to_string(j["d"].size()) + " entries, r = " + std::to_string(r));
  std::vector<Rational> d;
  Rational sum(0);
  for (std::size_t k = 0; k < j["d"].size(); ++k) {
    d.push_back(rational_field(j["d"][k], "d[" + std::to_string(k) + "]"));
    sum += d.back();
  }
  if (!sum.is_zero()) throw ParamsError(K::SumNonZero, "d sums to " + sum.str() + ", not 0");
  return std::make_shared<const Params>(r, c0, std::move(d));
}

ParamsPtr load_params(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParamsError(ParamsError::Kind::Io, "cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParamsError(ParamsError::Kind::BadFormat, path.string() + ": " + e.what());
  }
  return params_from_json(j);
}

json to_json(const Params& p) {
  json d = json::array();
  for (const auto& v : p.d_values()) d.push_back(v.str());
  return {{"r", p.r()}, {"c0", p.c0().str()}, {"d", d}};
}

GroupElement parse_group_element(const std::string& text, int r) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() < 2 || parts.size() > 3 || (parts.size() == 3 && parts[2] != "s"))
    throw std::invalid_argument("group element must be 'a,b' or 'a,b,s', got '" + text + "'");
  GroupElement g = GroupElement::diag(r, parse_int(parts[0]), parse_int(parts[1]));
  if (parts.size() == 3) g = g * GroupElement::transposition(r);
  return g;
}

json to_json(const ModElem& e) {
  json terms = json::array();
  for (const auto& [mono, c] : e.terms())
    terms.push_back({{"coeff", c.str()}, {"n", mono.n}, {"m", mono.m}, {"slot", slot_name(e.label(), mono.t)}});
  return {{"label", e.label().str()}, {"text", e.str()}, {"input", e.input_str()}, {"terms", terms}};
}

ModElem mod_elem_from_json(const ParamsPtr& p, const json& j) {
  const Label label = Label::parse(j.at("label").get<std::string>(), p->r());
  ModElem out(p, label);
  for (const auto& t : j.at("terms")) {
    const std::string slot = t.at("slot").get<std::string>();
    int idx = -1;
    for (int k = 0; k < label.dim(); ++k)
      if (slot_name(label, k) == slot) idx = k;
    if (idx < 0) throw std::invalid_argument("unknown slot '" + slot + "' for " + label.str());
    out.add_term({t.at("n").get<int>(), t.at("m").get<int>(), idx}, Rational::parse(t.at("coeff").get<std::string>()));
  }
  return out;
}

json to_json(const AtomResult& a) {
  return {{"atom", a.atom.str()}, {"value", a.value.str()}, {"holds", a.holds}};
}

json to_json(const RuleEvaluation& ev) {
  json atoms = json::array();
  for (const auto& a : ev.atoms) atoms.push_back(to_json(a));
  json out = {{"rule", ev.rule}, {"vars", ev.vars_str()}, {"atoms", atoms}, {"fired", ev.fired}};
  if (ev.rule == 16) out["alternative"] = ev.alternative;
  out["degree"] = ev.degree ? json(*ev.degree) : json(nullptr);
  return out;
}

json to_json(const ConditionReport& rep) {
  json evs = json::array();
  for (const auto& ev : rep.evaluations) evs.push_back(to_json(ev));
  return {{"from", rep.from.str()},
          {"to", rep.to.str()},
          {"exists", rep.exists()},
          {"predicted_degrees", rep.predicted_degrees()},
          {"evaluations", evs}};
}

json to_json(const HomMap& h) {
  json cases = json::array();
  for (const auto& c : h.cases) cases.push_back(c.str());
  return {{"domain", h.domain.str()},
          {"codomain", h.codomain.str()},
          {"rule", h.rule},
          {"degree", h.degree()},
          {"cases", cases},
          {"image", to_json(h.image)}};
}

json to_json(const DiagramEdge& e) {
  return {{"from", e.from.str()}, {"to", e.to.str()}, {"rule", e.rule}, {"degree", e.degree}};
}

json to_json(const MorphismDiagram& d, bool reduced_only) {
  json nodes = json::array();
  for (const auto& n : d.nodes) nodes.push_back(n.str());
  json edges = json::array();
  for (const auto& e : reduced_only ? d.reduced : d.edges) edges.push_back(to_json(e));
  return {{"nodes", nodes}, {"edges", edges}, {"reduced", reduced_only}};
}

}  // namespace cherednik
