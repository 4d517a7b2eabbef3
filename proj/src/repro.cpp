#include "cherednik/repro.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "cherednik/io.hpp"

#ifndef CHEREDNIK_DATA_DIR
#define CHEREDNIK_DATA_DIR "data"
#endif

namespace cherednik {

namespace {

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path.string());
  return json::parse(in);
}

std::vector<Rational> rationals(const json& j) {
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(Rational::parse(v.get<std::string>()));
  return out;
}

}  // namespace

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("CHEREDNIK_DATA_DIR")) return env;
  return CHEREDNIK_DATA_DIR;
}

bool same_up_to_scalar(const ModElem& a, const ModElem& b) {
  if (a.is_zero() || b.is_zero() || a.label() != b.label() || a.terms().size() != b.terms().size()) return false;
  const auto& [mono, c] = *a.terms().begin();
  const Rational other = b.coeff(mono);
  if (other.is_zero()) return false;
  return a == (c / other) * b;
}

ModElem swap_slot_labels(const ModElem& e) {
  if (e.label().kind != LabelKind::Pair) return e;
  ModElem out(e.params_ptr(), e.label());
  for (const auto& [mono, c] : e.terms()) out.add_term({mono.n, mono.m, 1 - mono.t}, c);
  return out;
}

bool matches_generator(const HomMap& h, const ModElem& expected, bool allow_slot_swap) {
  for (int t = 0; t < h.domain.dim(); ++t) {
    const ModElem img = h.generator_image(t);
    if (same_up_to_scalar(img, expected)) return true;
    if (allow_slot_swap && same_up_to_scalar(swap_slot_labels(img), expected)) return true;
  }
  return false;
}

Example35Golden load_example35(const std::filesystem::path& path) {
  const json j = read_json(path);
  const ParamsPtr p = params_from_json(j.at("params"));
  const Label label = Label::parse(j.at("label").get<std::string>(), p->r());
  return {p,
          label,
          CaseTag::parse(j.at("case").get<std::string>()),
          rationals(j.at("s")),
          rationals(j.at("a")),
          rationals(j.at("b")),
          ModElem::parse(p, label, j.at("polynomial").get<std::string>())};
}

Example35Report check_example35(const Example35Golden& g) {
  const Label& l = g.label;
  const RecSystem sys = solve_rec_system(*g.params, l.i, l.j,
                                         g.tag.family == Family::Pair1a ? PairVariant::A : PairVariant::B,
                                         g.tag.n, g.tag.k);
  const SingularResult res = construct_singular(g.params, l, g.tag);
  Example35Report rep{sys, res.elem};
  rep.s_ok = sys.s == g.s;
  rep.a_ok = sys.a == g.a;
  rep.b_ok = sys.b == g.b;
  rep.polynomial_ok = res.elem == g.polynomial;
  rep.singular = is_singular(res.elem);
  return rep;
}

Example36Golden load_example36(const std::filesystem::path& path) {
  const json j = read_json(path);
  Example36Golden g{params_from_json(j.at("params")), {}};
  const int r = g.params->r();
  for (const auto& row : j.at("morphisms")) {
    GoldenRow gr{row.at("row").get<int>(),
                 Label::parse(row.at("from").get<std::string>(), r),
                 Label::parse(row.at("to").get<std::string>(), r),
                 row.at("degree").get<int>(),
                 ModElem(g.params, Label{}),
                 std::nullopt,
                 row.value("note", "")};
    gr.image = ModElem::parse(g.params, gr.to, row.at("image").get<std::string>());
    if (row.contains("printed")) gr.printed = ModElem::parse(g.params, gr.to, row.at("printed").get<std::string>());
    g.rows.push_back(std::move(gr));
  }
  return g;
}

bool Example36Report::ok() const {
  if (!extra_edges.empty() || edge_count != rows.size()) return false;
  for (const auto& r : rows)
    if (!r.found || !r.degree_ok || !r.image_ok || !r.singular) return false;
  return true;
}

Example36Report check_example36(const Example36Golden& g) {
  const MorphismDiagram dia = morphism_diagram(g.params);
  Example36Report rep;
  rep.edge_count = dia.edges.size();
  std::vector<bool> used(dia.edges.size(), false);
  for (const auto& row : g.rows) {
    RowCheck rc;
    rc.row = row.row;
    for (std::size_t k = 0; k < dia.edges.size(); ++k) {
      const auto& e = dia.edges[k];
      if (used[k] || e.from != row.from || e.to != row.to) continue;
      used[k] = true;
      rc.found = true;
      rc.degree_ok = e.degree == row.degree;
      RuleEvaluation ev;
      ev.rule = e.rule;
      ev.vars = e.vars;
      ev.fired = true;
      ev.degree = e.degree;
      const HomMap h = build_hom(g.params, e.from, e.to, ev);
      // Slot labels may be exchanged only for the family-3 pair clauses.
      const bool swap = std::any_of(h.cases.begin(), h.cases.end(), [](const CaseTag& t) {
        return t.family == Family::Pair3a || t.family == Family::Pair3b;
      });
      rc.image_ok = matches_generator(h, row.image, swap);
      rc.printed_ok = row.printed ? matches_generator(h, *row.printed, swap) : rc.image_ok;
      rc.singular = is_singular(h.image) && is_equivariant(h);
      rc.map = h;
      break;
    }
    rep.rows.push_back(std::move(rc));
  }
  for (std::size_t k = 0; k < dia.edges.size(); ++k)
    if (!used[k]) rep.extra_edges.push_back(dia.edges[k]);
  return rep;
}

}  // namespace cherednik
