#include "cherednik/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "cherednik/dunkl_oracle.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/homspaces.hpp"
#include "cherednik/io.hpp"
#include "cherednik/repro.hpp"
#include "cherednik/singular_constructors.hpp"

namespace cherednik::cli {

namespace {

struct Options {
  bool json_report = false;
  std::string params_path;
  std::string label;
  std::string elem;
  std::string op;
  std::string case_tag;
  std::string from;
  std::string to;
  std::string dot_path;
  std::string example;
  std::optional<int> max_degree;
  bool brute = false;
  bool reduce = false;
  bool oracle = false;
};

// Exit code and JSON payload of one command.
struct Outcome {
  int code = kOk;
  json payload = json::object();
};

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].str();
  return out;
}

int degree_cap(const Options& o) { return o.max_degree.value_or(default_max_degree()); }

Outcome cmd_labels(const ParamsPtr& p, std::ostream& out) {
  Outcome res;
  json labels = json::array();
  for (const Label& l : enumerate_labels(p->r())) {
    json slots = json::array();
    const auto tabs = tableaux(l);
    out << l.str();
    for (std::size_t t = 0; t < tabs.size(); ++t) {
      json contents = json::array();
      out << "  " << slot_name(l, static_cast<int>(t)) << ":";
      for (const Box& b : tabs[t].boxes) {
        const Rational cc = charged_content(b, *p);
        contents.push_back(cc.str());
        out << " " << cc;
      }
      slots.push_back({{"slot", slot_name(l, static_cast<int>(t))}, {"charged_contents", contents}});
    }
    out << "\n";
    labels.push_back({{"label", l.str()}, {"slots", slots}});
  }
  res.payload["labels"] = labels;
  return res;
}

Outcome cmd_act(const ParamsPtr& p, const Options& o, std::ostream& out) {
  const Label label = Label::parse(o.label, p->r());
  const ModElem e = ModElem::parse(p, label, o.elem);
  ModElem img(p, label);
  if (o.op == "y1") img = y_act(e, 1);
  else if (o.op == "y2") img = y_act(e, 2);
  else if (o.op.rfind("w:", 0) == 0) img = w_act(e, parse_group_element(o.op.substr(2), p->r()));
  else throw std::invalid_argument("unknown --op '" + o.op + "' (expected y1, y2 or w:<g>)");
  Outcome res;
  res.payload = {{"op", o.op}, {"input", to_json(e)}, {"image", to_json(img)}};
  out << img.str() << "\n" << to_json(img).dump() << "\n";
  return res;
}

json singular_json(const SingularResult& s) {
  json ledger = json::object();
  for (const auto& [name, v] : s.ledger) ledger[name] = v.str();
  return {{"case", s.tag.str()},
          {"clearing_power", s.clearing_power},
          {"ledger", ledger},
          {"singular", is_singular(s.elem)},
          {"element", to_json(s.elem)}};
}

Outcome cmd_singular_construct(const ParamsPtr& p, const Options& o, std::ostream& out) {
  const Label label = Label::parse(o.label, p->r());
  std::vector<CaseTag> tags;
  if (!o.case_tag.empty()) tags.push_back(CaseTag::parse(o.case_tag));
  else tags = applicable_cases(*p, label, degree_cap(o));
  Outcome res;
  json results = json::array();
  if (tags.empty()) out << "no applicable case for " << label.str() << " up to n = " << degree_cap(o) << "\n";
  for (const CaseTag& tag : tags) {
    const SingularResult s = construct_singular(p, label, tag);
    const bool ok = is_singular(s.elem);
    out << tag.str() << "\n";
    for (const auto& [name, v] : s.ledger) out << "  " << name << " = " << v << "\n";
    if (s.clearing_power) out << "  cleared power " << s.clearing_power << "\n";
    out << "  " << s.elem.input_str() << "\n";
    out << "  " << (ok ? "singular" : "not singular") << "\n";
    if (!ok) res.code = kFailure;
    results.push_back(singular_json(s));
  }
  res.payload = {{"label", label.str()}, {"results", results}};
  return res;
}

Outcome cmd_singular_search(const ParamsPtr& p, const Options& o, std::ostream& out) {
  const Label mu = Label::parse(o.label, p->r());
  const int cap = degree_cap(o);
  const SingularMultiplicities m = singular_multiplicities(*p, mu, cap);
  json found = json::array();
  for (const auto& [lambda, by_degree] : m.by_label) {
    for (int d = 1; d <= cap; ++d) {
      if (by_degree[d] == 0) continue;
      out << lambda.str() << " degree " << d << " multiplicity " << by_degree[d] << "\n";
      found.push_back({{"type", lambda.str()}, {"degree", d}, {"multiplicity", by_degree[d]}});
    }
  }
  if (found.empty()) out << "no singular vectors in positive degree up to " << cap << "\n";
  Outcome res;
  res.payload = {{"label", mu.str()}, {"max_degree", cap}, {"found", found}};
  return res;
}

Outcome cmd_hom_check(const ParamsPtr& p, const Options& o, std::ostream& out) {
  const Label from = Label::parse(o.from, p->r());
  const Label to = Label::parse(o.to, p->r());
  const ConditionReport rep = hom_conditions(from, to, *p);
  out << from.str() << " -> " << to.str() << ": " << (rep.exists() ? "rule fires" : "no rule fires") << "\n";
  for (const RuleEvaluation& ev : rep.fired()) {
    out << "  rule " << ev.rule;
    if (ev.rule == 16) out << " alternative " << ev.alternative;
    out << " [" << ev.vars_str() << "]";
    if (ev.degree) out << " degree " << *ev.degree;
    out << "\n";
  }
  out << "  necessary content condition: " << (necessary_condition(from, to, *p) ? "holds" : "fails") << "\n";
  Outcome res;
  res.payload = to_json(rep);
  if (o.brute) {
    const int cap = degree_cap(o);
    const int dim = hom_dim_bruteforce(from, to, *p, cap);
    out << "  brute-force dimension " << dim << " (degree <= " << cap << ")\n";
    res.payload["bruteforce"] = {{"dimension", dim}, {"max_degree", cap}};
  }
  return res;
}

Outcome cmd_diagram(const ParamsPtr& p, const Options& o, std::ostream& out) {
  const MorphismDiagram dia = morphism_diagram(p);
  const std::string dot = dia.dot(o.reduce);
  if (o.dot_path == "-") {
    out << dot;
  } else {
    std::ofstream f(o.dot_path);
    if (!f) throw std::runtime_error("cannot write " + o.dot_path);
    f << dot;
    out << (o.reduce ? dia.reduced.size() : dia.edges.size()) << " edges written to " << o.dot_path << "\n";
  }
  Outcome res;
  res.payload = to_json(dia, o.reduce);
  return res;
}

Outcome cmd_verify(const ParamsPtr& p, const Options& o, std::ostream& out) {
  const Label label = Label::parse(o.label, p->r());
  const ModElem e = ModElem::parse(p, label, o.elem);
  const ModElem y1 = y_act(e, 1);
  const ModElem y2 = y_act(e, 2);
  const bool singular = y1.is_zero() && y2.is_zero();
  Outcome res;
  res.payload = {{"element", to_json(e)}, {"y1", to_json(y1)}, {"y2", to_json(y2)}, {"singular", singular}};
  out << "y1: " << y1.str() << "\n" << "y2: " << y2.str() << "\n";
  bool agree = true;
  if (o.oracle) {
    agree = y_act_oracle(e, 1) == y1 && y_act_oracle(e, 2) == y2;
    out << "oracle: " << (agree ? "agrees" : "DISAGREES") << "\n";
    res.payload["oracle_agrees"] = agree;
  }
  out << (singular ? "singular" : "not singular") << "\n";
  if (!singular || !agree) res.code = kFailure;
  return res;
}

Outcome repro_example35(std::ostream& out) {
  const Example35Golden g = load_example35(data_dir() / "golden" / "example35.json");
  const Example35Report rep = check_example35(g);
  out << "case " << g.tag.str() << " on " << g.label.str() << " (" << g.params->digest() << ")\n";
  out << "s=(" << join(rep.system.s) << ")" << (rep.s_ok ? "" : "  MISMATCH") << "\n";
  out << "a=(" << join(rep.system.a) << ")" << (rep.a_ok ? "" : "  MISMATCH") << "\n";
  out << "b=(" << join(rep.system.b) << ")" << (rep.b_ok ? "" : "  MISMATCH") << "\n";
  out << "p=" << rep.polynomial.input_str() << (rep.polynomial_ok ? "" : "  MISMATCH") << "\n";
  out << (rep.singular ? "singular" : "not singular") << "\n";
  Outcome res;
  res.code = rep.ok() ? kOk : kFailure;
  auto strs = [](const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
  };
  res.payload = {{"s", strs(rep.system.s)},
                 {"a", strs(rep.system.a)},
                 {"b", strs(rep.system.b)},
                 {"polynomial", to_json(rep.polynomial)},
                 {"matches_golden", rep.ok()}};
  return res;
}

Outcome repro_example36(std::ostream& out) {
  const Example36Golden g = load_example36(data_dir() / "golden" / "example36.json");
  const Example36Report rep = check_example36(g);
  json rows = json::array();
  for (std::size_t k = 0; k < rep.rows.size(); ++k) {
    const RowCheck& rc = rep.rows[k];
    const GoldenRow& gr = g.rows[k];
    out << rc.row << ": " << gr.from.str() << " -> " << gr.to.str();
    json row = {{"row", rc.row}, {"from", gr.from.str()}, {"to", gr.to.str()}, {"found", rc.found}};
    if (!rc.found) {
      out << "  MISSING\n";
      rows.push_back(row);
      continue;
    }
    const HomMap& h = *rc.map;
    out << "  rule " << h.rule << " degree " << h.degree() << "  " << h.image.input_str();
    if (!rc.degree_ok) out << "  DEGREE MISMATCH (golden " << gr.degree << ")";
    if (!rc.image_ok) out << "  IMAGE MISMATCH";
    if (!rc.singular) out << "  NOT SINGULAR";
    if (gr.printed && !rc.printed_ok) out << "  [differs from printed: " << gr.note << "]";
    out << "\n";
    row.update({{"rule", h.rule},
                {"degree", h.degree()},
                {"degree_ok", rc.degree_ok},
                {"image_ok", rc.image_ok},
                {"singular", rc.singular},
                {"image", to_json(h.image)}});
    rows.push_back(row);
  }
  for (const DiagramEdge& e : rep.extra_edges)
    out << "extra edge " << e.from.str() << " -> " << e.to.str() << " rule " << e.rule << "\n";
  out << rep.edge_count << " morphisms; " << (rep.ok() ? "all rows match" : "MISMATCH") << "\n";
  Outcome res;
  res.code = rep.ok() ? kOk : kFailure;
  res.payload = {{"edge_count", rep.edge_count}, {"rows", rows}, {"matches_golden", rep.ok()}};
  return res;
}

}  // namespace

int default_max_degree() {
  if (const char* env = std::getenv("CHEREDNIK2_MAX_DEGREE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 1000) return static_cast<int>(v);
  }
  return 25;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Standard modules, singular vectors and morphisms for G(r,1,2)", "cherednik2"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_report, "Print a JSON run report instead of text");

  auto params_opt = [&](CLI::App* sub) { sub->add_option("--params", o.params_path, "Parameter file")->required(); };
  auto degree_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--max-degree", o.max_degree, "Degree cap")->check(CLI::NonNegativeNumber);
    if (required) opt->required();
  };

  auto* labels = app.add_subcommand("labels", "List labels and charged contents");
  params_opt(labels);

  auto* act = app.add_subcommand("act", "Apply y1, y2 or a group element");
  params_opt(act);
  act->add_option("--label", o.label)->required();
  act->add_option("--elem", o.elem)->required();
  act->add_option("--op", o.op, "y1, y2 or w:a,b[,s]")->required();

  auto* singular = app.add_subcommand("singular", "Construct or search for singular vectors");
  singular->require_subcommand(1);
  auto* construct = singular->add_subcommand("construct", "Build singular vectors from the catalogue");
  params_opt(construct);
  construct->add_option("--label", o.label)->required();
  construct->add_option("--case", o.case_tag, "e.g. Pair1a,n=13,k=3");
  degree_opt(construct, false);
  auto* search = singular->add_subcommand("search", "Brute-force singular vectors by degree");
  params_opt(search);
  search->add_option("--label", o.label)->required();
  degree_opt(search, true);

  auto* hom = app.add_subcommand("hom", "Morphism existence");
  hom->require_subcommand(1);
  auto* check = hom->add_subcommand("check", "Evaluate the existence rules");
  params_opt(check);
  check->add_option("--from", o.from)->required();
  check->add_option("--to", o.to)->required();
  check->add_flag("--brute", o.brute, "Also compute the dimension by brute force");
  degree_opt(check, false);

  auto* diagram = app.add_subcommand("diagram", "Morphism diagram in DOT");
  params_opt(diagram);
  diagram->add_option("--dot", o.dot_path, "Output file, or - for stdout")->required();
  diagram->add_flag("--reduce", o.reduce, "Drop edges implied by composites");

  auto* verify = app.add_subcommand("verify", "Check that an element is singular");
  params_opt(verify);
  verify->add_option("--label", o.label)->required();
  verify->add_option("--elem", o.elem)->required();
  verify->add_flag("--oracle", o.oracle, "Cross-check with the direct Dunkl computation");

  auto* repro = app.add_subcommand("repro", "Regenerate a bundled example and diff with the golden file");
  repro->add_option("example", o.example)->required()->check(CLI::IsMember({"example35", "example36"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  const auto start = std::chrono::steady_clock::now();
  std::ostringstream text;
  Outcome res;
  ParamsPtr p;
  try {
    if (!o.params_path.empty()) p = load_params(o.params_path);
    if (labels->parsed()) res = cmd_labels(p, text);
    else if (act->parsed()) res = cmd_act(p, o, text);
    else if (construct->parsed()) res = cmd_singular_construct(p, o, text);
    else if (search->parsed()) res = cmd_singular_search(p, o, text);
    else if (check->parsed()) res = cmd_hom_check(p, o, text);
    else if (diagram->parsed()) res = cmd_diagram(p, o, text);
    else if (verify->parsed()) res = cmd_verify(p, o, text);
    else if (repro->parsed()) res = o.example == "example35" ? repro_example35(text) : repro_example36(text);
  } catch (const ParamsError& e) {
    err << "error: " << params_error_name(e.kind) << ": " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    // Labels, elements, case tags, group elements and rationals.
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.json_report) {
    json report = {{"command", args},
                   {"params_digest", p ? json(p->digest()) : json(nullptr)},
                   {"result", res.payload},
                   {"exit_code", res.code},
                   {"timing_ms", ms}};
    out << report.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return res.code;
}

}  // namespace cherednik::cli
