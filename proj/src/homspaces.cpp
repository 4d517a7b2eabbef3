#include "cherednik/homspaces.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <tuple>
#include <stdexcept>

#include "cherednik/errors.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/y_closed_form.hpp"

namespace cherednik {

namespace {

// ---------------------------------------------------------------------------
// Rule table

enum Var { A = 0, B = 1, C = 2, S = 3 };

struct Shape {
  LabelKind kind;
  int v1;
  int v2;  // ignored for Row/Col
};

struct AtomSpec {
  AtomicCondition::Kind kind;
  int x;
  int y;
  int sigma;
  int sign;
  /// Contribution of the atom's value to the generator degree: 2 for the
  /// x1^n x2^n steps, r for HALF (the (x1^r - x2^r)^k steps), 1 otherwise.
  int degree_weight;
};

AtomSpec Int(int x, int y, int sigma, int w = 1) { return {AtomicCondition::Kind::Int, x, y, sigma, 1, w}; }
AtomSpec Half(int sign) { return {AtomicCondition::Kind::Half, 0, 0, 0, sign, -1}; }

struct Rule {
  int id;
  Shape from;
  Shape to;
  std::vector<std::vector<AtomSpec>> alternatives;
};

const std::vector<Rule>& rules() {
  using K = LabelKind;
  static const std::vector<Rule> table = {
      {1, {K::Row, A, A}, {K::Row, B, B}, {{Int(B, A, 0, 2)}}},
      {2, {K::Row, A, A}, {K::Col, A, A}, {{Half(-1)}}},
      {3, {K::Row, A, A}, {K::Pair, A, B}, {{Int(B, A, -1)}}},
      {4, {K::Col, A, A}, {K::Row, A, A}, {{Half(+1)}}},
      {5, {K::Col, A, A}, {K::Col, B, B}, {{Int(B, A, 0, 2)}}},
      {6, {K::Col, A, A}, {K::Pair, A, B}, {{Int(B, A, +1)}}},
      {7, {K::Pair, A, B}, {K::Row, A, A}, {{Int(A, B, +1)}}},
      {8, {K::Pair, A, B}, {K::Col, A, A}, {{Int(A, B, -1)}}},
      {9, {K::Pair, A, B}, {K::Pair, A, C}, {{Int(C, B, 0)}}},
      {10, {K::Row, A, A}, {K::Col, B, B}, {{Int(B, A, 0, 2), Half(-1)}}},
      {11, {K::Col, A, A}, {K::Row, B, B}, {{Int(B, A, 0, 2), Half(+1)}}},
      {12, {K::Row, A, A}, {K::Pair, B, C}, {{Int(B, A, 0, 2), Int(C, B, -1)}}},
      {13, {K::Col, A, A}, {K::Pair, B, C}, {{Int(B, A, 0, 2), Int(C, B, +1)}}},
      {14, {K::Pair, A, B}, {K::Row, C, C}, {{Int(C, A, 0), Int(C, B, +1)}}},
      {15, {K::Pair, A, B}, {K::Col, C, C}, {{Int(C, A, 0), Int(C, B, -1)}}},
      {16, {K::Pair, A, B}, {K::Pair, C, S}, {{Int(C, A, 0), Int(S, B, 0)}, {Int(S, A, 0), Int(C, B, 0)}}},
  };
  return table;
}

using Binding = std::array<int, 4>;

bool bind(Binding& b, int var, int value) {
  if (b[static_cast<std::size_t>(var)] == -1) {
    b[static_cast<std::size_t>(var)] = value;
    return true;
  }
  return b[static_cast<std::size_t>(var)] == value;
}

/// Every binding extending `in` that makes `shape` match `label`.
std::vector<Binding> match(const Shape& shape, const Label& label, const Binding& in) {
  std::vector<Binding> out;
  if (shape.kind != label.kind) return out;
  if (label.kind != LabelKind::Pair) {
    Binding b = in;
    if (bind(b, shape.v1, label.i)) out.push_back(b);
    return out;
  }
  for (int order = 0; order < 2; ++order) {
    Binding b = in;
    const int first = order == 0 ? label.i : label.j;
    const int second = order == 0 ? label.j : label.i;
    if (bind(b, shape.v1, first) && bind(b, shape.v2, second)) out.push_back(b);
  }
  return out;
}

AtomicCondition make_atom(const AtomSpec& s, const Binding& b) {
  if (s.kind == AtomicCondition::Kind::Half) return AtomicCondition::half(s.sign);
  return AtomicCondition::integral(b[static_cast<std::size_t>(s.x)], b[static_cast<std::size_t>(s.y)], s.sigma);
}

template <class Visit>
void for_each_evaluation(const Label& from, const Label& to, const Params& p, Visit&& visit) {
  for (const Rule& rule : rules()) {
    for (const Binding& b1 : match(rule.from, from, Binding{-1, -1, -1, -1})) {
      for (const Binding& b : match(rule.to, to, b1)) {
        for (std::size_t alt = 0; alt < rule.alternatives.size(); ++alt) {
          RuleEvaluation ev;
          ev.rule = rule.id;
          ev.alternative = static_cast<int>(alt);
          ev.vars = b;
          ev.fired = true;
          long degree = 0;
          for (const AtomSpec& spec : rule.alternatives[alt]) {
            AtomResult res{make_atom(spec, b), Rational(0), false};
            res.value = res.atom.value(p);
            res.holds = res.atom.holds(p);
            ev.fired = ev.fired && res.holds;
            if (res.holds) {
              const long v = res.value.to_long();
              degree += spec.degree_weight < 0 ? v * p.r() : v * spec.degree_weight;
            }
            ev.atoms.push_back(std::move(res));
          }
          if (ev.fired) ev.degree = static_cast<int>(degree);
          if (!visit(std::move(ev))) return;
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Torus weights

std::array<int, 2> term_weight(const Label& label, const Mono& mono, int r) {
  const auto w = slot_weight(label, mono.t);
  return {static_cast<int>(mod_r(w[0] - mono.n, r)), static_cast<int>(mod_r(w[1] - mono.m, r))};
}

std::array<int, 2> element_weight(const ModElem& e) {
  const int r = e.params().r();
  if (e.is_zero()) throw std::logic_error("weight of the zero element");
  const auto w = term_weight(e.label(), e.terms().begin()->first, r);
  for (const auto& [mono, c] : e.terms())
    if (term_weight(e.label(), mono, r) != w) throw std::logic_error("element is not a torus weight vector");
  return w;
}

// ---------------------------------------------------------------------------
// Single-condition morphisms

CaseTag find_case(const Params& p, const Label& label, Family family, int n) {
  for (int k = 0; k <= n + 1; ++k) {
    const CaseTag tag{family, n, k};
    if (case_applies(p, label, tag)) return tag;
  }
  throw InapplicableCase("no " + family_name(family) + " clause of degree " + std::to_string(n) + " for " +
                         label.str());
}

/// Places a singular vector of the codomain as the image of the domain
/// generator whose torus weight it carries.
HomMap place_image(const Label& domain, const ModElem& p, int rule, std::vector<CaseTag> cases) {
  const int r = p.params().r();
  const auto w = element_weight(p);
  const GroupElement s = GroupElement::transposition(r);
  HomMap h{domain, p.label(), p, rule, std::move(cases)};
  const auto w0 = slot_weight(domain, 0);
  if (domain.kind != LabelKind::Pair) {
    const int sign = act_on_slot(domain, s, 0).sign;
    ModElem expected = p;
    if (sign < 0) expected = Rational(-1) * p;
    if (std::array<int, 2>{static_cast<int>(mod_r(w0[0], r)), static_cast<int>(mod_r(w0[1], r))} != w ||
        !(w_act(p, s) == expected))
      throw std::logic_error("generator image does not carry the W-type of " + domain.str());
    return h;
  }
  const auto w1 = slot_weight(domain, 1);
  if (std::array<int, 2>{w0[0], w0[1]} == w) return h;
  if (std::array<int, 2>{w1[0], w1[1]} == w) {
    h.image = w_act(p, s);
    return h;
  }
  throw std::logic_error("generator image weight matches no generator of " + domain.str());
}

Rational int_value(const Params& p, int x, int y, int sigma) {
  return AtomicCondition::integral(x, y, sigma).value(p);
}

/// Rules 1-9 with explicit indices:
///   1 Row(x)->Row(y)   2 Row(x)->Col(x)   3 Row(x)->Pair{x,y}
///   4 Col(x)->Row(x)   5 Col(x)->Col(y)   6 Col(x)->Pair{x,y}
///   7 Pair{x,y}->Row(x) 8 Pair{x,y}->Col(x) 9 Pair{x,y}->Pair{x,z}
HomMap single_rule(const ParamsPtr& pp, int rule, int x, int y, int z = -1) {
  const Params& p = *pp;
  const int r = p.r();
  auto check = [&](const AtomicCondition& atom) {
    if (!atom.holds(p)) throw InapplicableCase("rule " + std::to_string(rule) + " needs " + atom.str());
  };
  auto build = [&](const Label& from, const Label& to, Family fam, int n) {
    const CaseTag tag = find_case(p, to, fam, n);
    return place_image(from, construct_singular(pp, to, tag).elem, rule, {tag});
  };
  switch (rule) {
    case 1:
    case 5: {
      const bool row = rule == 1;
      check(AtomicCondition::integral(y, x, 0));
      const Label from = row ? Label::row(x) : Label::col(x);
      const Label to = row ? Label::row(y) : Label::col(y);
      const int n = static_cast<int>(int_value(p, y, x, 0).to_long());
      if (n == 0) return identity_hom(pp, from);
      return build(from, to, row ? Family::RowB : Family::ColB, n);
    }
    case 2:
    case 4: {
      const bool to_col = rule == 2;
      check(AtomicCondition::half(to_col ? -1 : +1));
      const int k = static_cast<int>(AtomicCondition::half(to_col ? -1 : +1).value(p).to_long());
      const Label from = to_col ? Label::row(x) : Label::col(x);
      const Label to = to_col ? Label::col(x) : Label::row(x);
      const CaseTag tag{to_col ? Family::ColA : Family::RowA, k * r, k};
      return place_image(from, construct_singular(pp, to, tag).elem, rule, {tag});
    }
    case 3:
    case 6: {
      const bool row = rule == 3;
      const int sigma = row ? -1 : +1;
      check(AtomicCondition::integral(y, x, sigma));
      const int n = static_cast<int>(int_value(p, y, x, sigma).to_long());
      const Family fam = x < y ? (row ? Family::Pair3b : Family::Pair2b) : (row ? Family::Pair3a : Family::Pair2a);
      return build(row ? Label::row(x) : Label::col(x), Label::pair(x, y), fam, n);
    }
    case 7:
    case 8: {
      const bool row = rule == 7;
      const int sigma = row ? +1 : -1;
      check(AtomicCondition::integral(x, y, sigma));
      const int n = static_cast<int>(int_value(p, x, y, sigma).to_long());
      return build(Label::pair(x, y), row ? Label::row(x) : Label::col(x), row ? Family::RowC : Family::ColC, n);
    }
    case 9: {
      check(AtomicCondition::integral(z, y, 0));
      const int n = static_cast<int>(int_value(p, z, y, 0).to_long());
      if (n == 0) return identity_hom(pp, Label::pair(x, y));
      return build(Label::pair(x, y), Label::pair(x, z), x < z ? Family::Pair1b : Family::Pair1a, n);
    }
    default: throw std::invalid_argument("single_rule: rule " + std::to_string(rule));
  }
}

HomMap composite(const HomMap& second, const HomMap& first, int rule) {
  HomMap h = compose(second, first);
  h.rule = rule;
  return h;
}

/// Rule 16 through Pair{c,b} (moving a then b) or, failing that, Pair{a,s}.
HomMap pair_to_pair(const ParamsPtr& p, int a, int b, int c, int s) {
  if (c != b) {
    const HomMap f = single_rule(p, 9, b, a, c);  // Pair{b,a} -> Pair{b,c}
    const HomMap g = single_rule(p, 9, c, b, s);  // Pair{c,b} -> Pair{c,s}
    return composite(g, f, 16);
  }
  const HomMap f = single_rule(p, 9, a, b, s);  // Pair{a,b} -> Pair{a,s}
  const HomMap g = single_rule(p, 9, s, a, c);  // Pair{s,a} -> Pair{s,c}
  return composite(g, f, 16);
}

// ---------------------------------------------------------------------------
// Weight-block linear algebra

struct FpParams {
  int r_;
  Fp c0_;
  std::vector<Fp> d_;
  int r() const { return r_; }
  const Fp& c0() const { return c0_; }
  const Fp& d(long k) const { return d_[static_cast<std::size_t>(mod_r(k, r_))]; }
};

std::optional<FpParams> reduce_params(const Params& p) {
  FpParams out{p.r(), Fp(0), {}};
  const auto c0 = to_fp(p.c0());
  if (!c0) return std::nullopt;
  out.c0_ = *c0;
  for (const auto& d : p.d_values()) {
    const auto v = to_fp(d);
    if (!v) return std::nullopt;
    out.d_.push_back(*v);
  }
  return out;
}

/// Monomials of degree d in Delta(mu) grouped by torus weight w0*r + w1.
std::vector<std::vector<Mono>> weight_blocks(const Label& mu, int r, int d) {
  std::vector<std::vector<Mono>> blocks(static_cast<std::size_t>(r * r));
  for (int n = d; n >= 0; --n)
    for (int t = 0; t < mu.dim(); ++t) {
      const Mono mono{n, d - n, t};
      const auto w = term_weight(mu, mono, r);
      blocks[static_cast<std::size_t>(w[0] * r + w[1])].push_back(mono);
    }
  return blocks;
}

/// Rows: the coordinates of y1 and y2 applied to each column monomial.
template <class F, class P>
Matrix<F> y_matrix(const P& params, const Label& mu, const std::vector<Mono>& cols, int d) {
  const int dim = mu.dim();
  std::vector<int> row_of(static_cast<std::size_t>(2 * std::max(d, 1) * dim), -1);
  Matrix<F> rows;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Mono& mono = cols[c];
    for (int axis = 1; axis <= 2; ++axis) {
      y_closed_form<F>(params, mu, axis, mono.n, mono.m, mono.t, [&](int n, int, int t, const F& v) {
        const std::size_t key = static_cast<std::size_t>(((axis - 1) * d + n) * dim + t);
        int& row = row_of[key];
        if (row < 0) {
          row = static_cast<int>(rows.size());
          rows.emplace_back(cols.size(), F(0));
        }
        rows[static_cast<std::size_t>(row)][c] = rows[static_cast<std::size_t>(row)][c] + v;
      });
    }
  }
  return rows;
}

/// Rows of (s - sign) restricted to a transposition-stable block.
Matrix<Rational> swap_rows(const Label& mu, const std::vector<Mono>& cols, int r, int sign) {
  const GroupElement s = GroupElement::transposition(r);
  Matrix<Rational> rows(cols.size(), std::vector<Rational>(cols.size(), Rational(0)));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Mono& mono = cols[c];
    const MonomialImage mi = act_on_monomial(s, mono.n, mono.m);
    const SlotImage si = act_on_slot(mu, s, mono.t);
    const Mono image{mi.n, mi.m, si.slot};
    const auto it = std::find(cols.begin(), cols.end(), image);
    if (it == cols.end()) throw std::logic_error("transposition leaves the weight block");
    const std::size_t row = static_cast<std::size_t>(it - cols.begin());
    rows[row][c] += Rational(si.sign);
    rows[c][c] -= Rational(sign);
  }
  return rows;
}

std::size_t kernel_dim_rational(Matrix<Rational> m, std::size_t cols) { return cols - matrix_rank(std::move(m), cols); }

/// Coordinates of elements of one module against a shared monomial index.
template <class F, class Elem>
Matrix<F> coordinates(const std::vector<Elem>& elems, std::map<Mono, std::size_t, CanonicalOrder>& index) {
  for (const auto& e : elems)
    for (const auto& [mono, c] : e.terms()) index.emplace(mono, index.size());
  Matrix<F> rows;
  for (const auto& e : elems) {
    std::vector<F> row(index.size(), F(0));
    for (const auto& [mono, c] : e.terms()) row[index.at(mono)] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<CycloNum> cyclo_coordinates(const std::vector<CycloModElem>& elems, int r,
                                   std::map<Mono, std::size_t, CanonicalOrder>& index) {
  for (const auto& e : elems)
    for (const auto& [mono, c] : e.terms()) index.emplace(mono, index.size());
  Matrix<CycloNum> rows;
  for (const auto& e : elems) {
    std::vector<CycloNum> row(index.size(), CycloNum(r));
    for (const auto& [mono, c] : e.terms()) row[index.at(mono)] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t cyclo_rank(const std::vector<CycloModElem>& elems, int r) {
  std::map<Mono, std::size_t, CanonicalOrder> index;
  auto m = cyclo_coordinates(elems, r, index);
  for (auto& row : m) row.resize(index.size(), CycloNum(r));
  return matrix_rank(std::move(m), index.size());
}

}  // namespace

// ---------------------------------------------------------------------------
// Conditions

Rational AtomicCondition::value(const Params& p) const {
  if (kind == Kind::Half) return Rational(2 * sign) * p.c0();
  return p.d(a) - p.d(b) + Rational(sigma * p.r()) * p.c0();
}

bool AtomicCondition::holds(const Params& p) const {
  const Rational v = value(p);
  if (!v.is_integer() || v.sign() < 0) return false;
  if (kind == Kind::Half) return mod_r(v.to_long(), 2) == 1;
  return mod_r(v.to_long() - (a - b), p.r()) == 0;
}

std::string AtomicCondition::str() const {
  if (kind == Kind::Half) return sign > 0 ? "c0=k/2" : "c0=-k/2";
  std::string s = "d" + std::to_string(a) + "-d" + std::to_string(b);
  if (sigma > 0) s += "+c0r";
  if (sigma < 0) s += "-c0r";
  return s;
}

std::string RuleEvaluation::vars_str() const {
  static constexpr char names[] = {'a', 'b', 'c', 's'};
  std::string out;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (vars[k] < 0) continue;
    if (!out.empty()) out += ",";
    out += std::string(1, names[k]) + "=" + std::to_string(vars[k]);
  }
  return out;
}

bool ConditionReport::exists() const {
  return std::any_of(evaluations.begin(), evaluations.end(), [](const RuleEvaluation& e) { return e.fired; });
}

std::vector<RuleEvaluation> ConditionReport::fired() const {
  std::vector<RuleEvaluation> out;
  for (const auto& e : evaluations)
    if (e.fired) out.push_back(e);
  return out;
}

std::vector<int> ConditionReport::predicted_degrees() const {
  std::vector<int> out;
  for (const auto& e : evaluations)
    if (e.fired && e.degree) out.push_back(*e.degree);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool necessary_condition(const Label& from, const Label& to, const Params& p) {
  const int r = p.r();
  for (const Tableau& t : tableaux(from))
    for (const Tableau& u : tableaux(to)) {
      bool ok = true;
      for (std::size_t k = 0; k < 2 && ok; ++k) {
        const Rational diff = charged_content(u.boxes[k], p) - charged_content(t.boxes[k], p);
        ok = diff.is_integer() && diff.sign() >= 0 &&
             mod_r(diff.to_long() - (u.boxes[k].component - t.boxes[k].component), r) == 0;
      }
      if (ok) return true;
    }
  return false;
}

ConditionReport hom_conditions(const Label& from, const Label& to, const Params& p) {
  ConditionReport rep{from, to, {}};
  if (from == to) {
    RuleEvaluation id;
    id.fired = true;
    id.degree = 0;
    rep.evaluations.push_back(id);
    return rep;
  }
  for_each_evaluation(from, to, p, [&](RuleEvaluation ev) {
    rep.evaluations.push_back(std::move(ev));
    return true;
  });
  return rep;
}

bool hom_rule_fires(const Label& from, const Label& to, const Params& p) {
  if (from == to) return true;
  bool found = false;
  for_each_evaluation(from, to, p, [&](RuleEvaluation ev) {
    found = ev.fired;
    return !found;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Morphisms

ModElem HomMap::generator_image(int slot) const {
  if (slot == 0) return image;
  if (domain.kind != LabelKind::Pair || slot != 1) throw std::invalid_argument("generator_image: bad slot");
  return w_act(image, GroupElement::transposition(image.params().r()));
}

HomMap identity_hom(const ParamsPtr& p, const Label& label) {
  return HomMap{label, label, ModElem::generator(p, label, 0), 0, {}};
}

ModElem apply_hom(const HomMap& h, const ModElem& e) {
  if (e.label() != h.domain)
    throw std::invalid_argument("apply_hom: element of " + e.label().str() + ", map from " + h.domain.str());
  std::vector<ModElem> gens;
  for (int t = 0; t < h.domain.dim(); ++t) gens.push_back(h.generator_image(t));
  ModElem out(h.image.params_ptr(), h.codomain);
  for (const auto& [mono, c] : e.terms()) out += x_mul(gens[static_cast<std::size_t>(mono.t)], mono.n, mono.m, c);
  return out;
}

bool is_equivariant(const HomMap& h) {
  const int r = h.image.params().r();
  const std::vector<GroupElement> gens = {GroupElement::zeta_axis(r, 1, 1), GroupElement::zeta_axis(r, 2, 1),
                                          GroupElement::transposition(r)};
  for (const auto& g : gens)
    for (int t = 0; t < h.domain.dim(); ++t) {
      const CycloModElem lhs = w_act(CycloModElem::from_rational(h.generator_image(t)), g);
      const SlotImage si = act_on_slot(h.domain, g, t);
      CycloModElem rhs = CycloModElem::from_rational(h.generator_image(si.slot));
      CycloNum factor = CycloNum::zeta_pow(r, si.zeta_exp);
      if (si.sign < 0) factor = -factor;
      rhs.scale(factor);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

HomMap compose(const HomMap& g, const HomMap& f) {
  if (f.codomain != g.domain)
    throw std::invalid_argument("compose: " + f.codomain.str() + " does not match " + g.domain.str());
  HomMap h{f.domain, g.codomain, apply_hom(g, f.image), 0, f.cases};
  h.cases.insert(h.cases.end(), g.cases.begin(), g.cases.end());
  if (h.image.is_zero())
    throw ZeroComposite("composite " + f.domain.str() + " -> " + f.codomain.str() + " -> " + g.codomain.str() +
                        " vanishes");
  return h;
}

HomMap build_hom(const ParamsPtr& p, const Label& from, const Label& to, const RuleEvaluation& ev) {
  if (!ev.fired) throw InapplicableCase("rule " + std::to_string(ev.rule) + " does not fire");
  if (ev.rule == 0) return identity_hom(p, from);
  const int a = ev.vars[A], b = ev.vars[B], c = ev.vars[C], s = ev.vars[S];
  HomMap h = [&]() -> HomMap {
    switch (ev.rule) {
      case 1: return single_rule(p, 1, a, b);
      case 2: return single_rule(p, 2, a, a);
      case 3: return single_rule(p, 3, a, b);
      case 4: return single_rule(p, 4, a, a);
      case 5: return single_rule(p, 5, a, b);
      case 6: return single_rule(p, 6, a, b);
      case 7: return single_rule(p, 7, a, b);
      case 8: return single_rule(p, 8, a, b);
      case 9: return single_rule(p, 9, a, b, c);
      case 10: return composite(single_rule(p, 5, a, b), single_rule(p, 2, a, a), 10);
      case 11: return composite(single_rule(p, 1, a, b), single_rule(p, 4, a, a), 11);
      case 12: return composite(single_rule(p, 3, b, c), single_rule(p, 1, a, b), 12);
      case 13: return composite(single_rule(p, 6, b, c), single_rule(p, 5, a, b), 13);
      case 14:
      case 15: {
        const int last = ev.rule == 14 ? 7 : 8;
        // c = b collapses to the single rule on Pair{b,a}, which then fires as well.
        if (c == b) {
          HomMap direct = single_rule(p, last, b, a);
          direct.rule = ev.rule;
          return direct;
        }
        return composite(single_rule(p, last, c, b), single_rule(p, 9, b, a, c), ev.rule);
      }
      case 16:
        return ev.alternative == 0 ? pair_to_pair(p, a, b, c, s) : pair_to_pair(p, a, b, s, c);
      default: throw std::invalid_argument("build_hom: unknown rule");
    }
  }();
  if (h.domain != from || h.codomain != to)
    throw std::logic_error("build_hom: constructed " + h.domain.str() + " -> " + h.codomain.str());
  h.rule = ev.rule;
  return h;
}

std::size_t hom_rank(const std::vector<HomMap>& maps) {
  if (maps.empty()) return 0;
  std::vector<ModElem> images;
  for (const auto& h : maps) images.push_back(h.image);
  std::map<Mono, std::size_t, CanonicalOrder> index;
  auto m = coordinates<Rational>(images, index);
  for (auto& row : m) row.resize(index.size(), Rational(0));
  return matrix_rank(std::move(m), index.size());
}

// ---------------------------------------------------------------------------
// Singular spaces

std::vector<ModElem> singular_space(const ParamsPtr& pp, const Label& mu, int d, const SingularSpaceOptions& opt) {
  if (d < 0) throw std::invalid_argument("singular_space: negative degree");
  const Params& p = *pp;
  const int r = p.r();
  const auto fp = opt.mod_p_filter ? reduce_params(p) : std::nullopt;
  std::mt19937 rng(opt.shuffle_seed.value_or(0));
  std::vector<ModElem> out;
  for (auto& cols : weight_blocks(mu, r, d)) {
    if (cols.empty()) continue;
    if (opt.shuffle_seed) std::shuffle(cols.begin(), cols.end(), rng);
    if (fp && d > 0) {
      const auto mfp = y_matrix<Fp>(*fp, mu, cols, d);
      if (matrix_rank(mfp, cols.size()) == cols.size()) continue;
    }
    const auto m = y_matrix<Rational>(p, mu, cols, d);
    for (const auto& v : kernel_basis(m, cols.size(), Rational(0), Rational(1))) {
      ModElem e(pp, mu);
      for (std::size_t c = 0; c < cols.size(); ++c) e.add_term(cols[c], v[c]);
      out.push_back(normalized(e));
    }
  }
  return out;
}

int isotypic_multiplicity(const std::vector<ModElem>& basis, const Label& lambda) {
  if (basis.empty()) return 0;
  const int r = basis.front().params().r();
  std::vector<CycloModElem> cyc;
  for (const auto& e : basis) cyc.push_back(CycloModElem::from_rational(e));
  const std::size_t rank = cyclo_rank(cyc, r);

  for (const auto& g : {GroupElement::zeta_axis(r, 1, 1), GroupElement::zeta_axis(r, 2, 1),
                        GroupElement::transposition(r)}) {
    std::vector<CycloModElem> ext = cyc;
    for (const auto& e : cyc) ext.push_back(w_act(e, g));
    if (cyclo_rank(ext, r) != rank) throw NotWStable("span is not stable under " + g.str());
  }

  const auto group = group_elements(r);
  const Rational scale(lambda.dim(), static_cast<long>(group.size()));
  std::vector<CycloModElem> projected;
  for (const auto& e : cyc) {
    CycloModElem acc(e.params_ptr(), e.label());
    for (const auto& g : group) {
      CycloModElem term = w_act(e, g);
      term.scale(character(lambda, g).conj() * scale);
      acc += term;
    }
    projected.push_back(std::move(acc));
  }
  const std::size_t image = cyclo_rank(projected, r);
  if (image % static_cast<std::size_t>(lambda.dim()) != 0)
    throw std::logic_error("isotypic projection has rank " + std::to_string(image) + ", not a multiple of dim");
  return static_cast<int>(image / static_cast<std::size_t>(lambda.dim()));
}

int SingularMultiplicities::total(const Label& lambda) const {
  const auto it = by_label.find(lambda);
  if (it == by_label.end()) return 0;
  int sum = 0;
  for (int v : it->second) sum += v;
  return sum;
}

SingularMultiplicities singular_multiplicities(const Params& p, const Label& mu, int max_degree) {
  const int r = p.r();
  SingularMultiplicities out{mu, max_degree, {}};
  for (const Label& l : enumerate_labels(r)) out.by_label[l] = std::vector<int>(static_cast<std::size_t>(max_degree + 1), 0);
  const auto fp = reduce_params(p);
  for (int d = 0; d <= max_degree; ++d) {
    const auto blocks = weight_blocks(mu, r, d);
    for (int w0 = 0; w0 < r; ++w0)
      for (int w1 = w0; w1 < r; ++w1) {
        const auto& cols = blocks[static_cast<std::size_t>(w0 * r + w1)];
        if (cols.empty()) continue;
        if (fp && d > 0 && matrix_rank(y_matrix<Fp>(*fp, mu, cols, d), cols.size()) == cols.size()) continue;
        const auto y = y_matrix<Rational>(p, mu, cols, d);
        if (w0 != w1) {
          out.by_label[Label::pair(w0, w1)][static_cast<std::size_t>(d)] +=
              static_cast<int>(kernel_dim_rational(y, cols.size()));
          continue;
        }
        if (kernel_dim_rational(y, cols.size()) == 0) continue;
        for (int sign : {+1, -1}) {
          Matrix<Rational> stacked = y;
          for (auto& row : swap_rows(mu, cols, r, sign)) stacked.push_back(std::move(row));
          const Label target = sign > 0 ? Label::row(w0) : Label::col(w0);
          out.by_label[target][static_cast<std::size_t>(d)] +=
              static_cast<int>(kernel_dim_rational(std::move(stacked), cols.size()));
        }
      }
  }
  return out;
}

int hom_dim_bruteforce(const Label& lambda, const Label& mu, const Params& p, int max_degree) {
  return singular_multiplicities(p, mu, max_degree).total(lambda);
}

DimensionTwoReport dimension_two_criterion(const Params& p, int i, int j, int k) {
  DimensionTwoReport rep;
  rep.holds = true;
  for (const auto& atom : {AtomicCondition::integral(i, k, +1), AtomicCondition::integral(i, k, -1),
                           AtomicCondition::integral(j, i, +1), AtomicCondition::integral(j, i, -1)}) {
    AtomResult res{atom, atom.value(p), atom.holds(p)};
    rep.holds = rep.holds && res.holds;
    rep.atoms.push_back(std::move(res));
  }
  const int r = p.r();
  const bool distinct = mod_r(i, r) != mod_r(j, r) && mod_r(i, r) != mod_r(k, r) && mod_r(j, r) != mod_r(k, r);
  if (!distinct) {
    rep.holds = false;
    return rep;
  }
  rep.from = Label::pair(static_cast<int>(mod_r(i, r)), static_cast<int>(mod_r(k, r)));
  rep.to = Label::pair(static_cast<int>(mod_r(i, r)), static_cast<int>(mod_r(j, r)));
  return rep;
}

// ---------------------------------------------------------------------------
// Diagram

MorphismDiagram morphism_diagram(const ParamsPtr& pp) {
  const Params& p = *pp;
  MorphismDiagram dia;
  dia.nodes = enumerate_labels(p.r());
  auto node_index = [&](const Label& l) {
    return std::find(dia.nodes.begin(), dia.nodes.end(), l) - dia.nodes.begin();
  };
  for (const Label& from : dia.nodes)
    for (const Label& to : dia.nodes) {
      if (from == to) continue;
      for (const auto& ev : hom_conditions(from, to, p).evaluations)
        if (ev.fired && ev.rule >= 1 && ev.rule <= 9) dia.edges.push_back({from, to, ev.rule, *ev.degree, ev.vars});
    }
  std::stable_sort(dia.edges.begin(), dia.edges.end(), [&](const DiagramEdge& x, const DiagramEdge& y) {
    return std::make_tuple(node_index(x.from), node_index(x.to), x.rule, x.degree, x.vars) <
           std::make_tuple(node_index(y.from), node_index(y.to), y.rule, y.degree, y.vars);
  });

  std::vector<HomMap> maps;
  for (const auto& e : dia.edges) {
    RuleEvaluation ev;
    ev.rule = e.rule;
    ev.vars = e.vars;
    ev.fired = true;
    ev.degree = e.degree;
    maps.push_back(build_hom(pp, e.from, e.to, ev));
  }

  // Composites along paths of length >= 2 that avoid the edge under test.
  for (std::size_t target = 0; target < dia.edges.size(); ++target) {
    const DiagramEdge& te = dia.edges[target];
    std::vector<HomMap> composites;
    std::function<void(const HomMap&, int, int)> walk = [&](const HomMap& sofar, int budget, int length) {
      if (sofar.codomain == te.to && budget == 0 && length >= 2) {
        composites.push_back(sofar);
        return;
      }
      for (std::size_t k = 0; k < dia.edges.size(); ++k) {
        if (k == target || dia.edges[k].from != sofar.codomain || dia.edges[k].degree > budget) continue;
        try {
          walk(compose(maps[k], sofar), budget - dia.edges[k].degree, length + 1);
        } catch (const ZeroComposite&) {
        }
      }
    };
    for (std::size_t k = 0; k < dia.edges.size(); ++k) {
      if (k == target || dia.edges[k].from != te.from || dia.edges[k].degree >= te.degree) continue;
      walk(maps[k], te.degree - dia.edges[k].degree, 1);
    }
    bool redundant = false;
    if (!composites.empty()) {
      const std::size_t base = hom_rank(composites);
      composites.push_back(maps[target]);
      redundant = hom_rank(composites) == base;
    }
    if (!redundant) dia.reduced.push_back(te);
  }
  return dia;
}

std::string MorphismDiagram::dot(bool reduced_only) const {
  std::ostringstream os;
  os << "digraph morphisms {\n";
  for (const auto& n : nodes) os << "  \"" << n.str() << "\";\n";
  for (const auto& e : reduced_only ? reduced : edges)
    os << "  \"" << e.from.str() << "\" -> \"" << e.to.str() << "\" [label=\"rule=" << e.rule
       << ", deg=" << e.degree << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace cherednik
