#include "cherednik/standard_module.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "cherednik/errors.hpp"
#include "cherednik/y_closed_form.hpp"

namespace cherednik {

namespace {

void check_slot(const Label& label, int t) {
  if (t < 0 || t >= label.dim())
    throw std::invalid_argument("slot " + std::to_string(t) + " out of range for " + label.str());
}

std::string monomial_text(int n, int m) {
  std::string s;
  auto var = [&](const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  var("x1", n);
  var("x2", m);
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_exponent(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("missing exponent in '" + std::string(whole) + "'");
  int v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || v > 100000)
      throw std::invalid_argument("bad exponent in '" + std::string(whole) + "'");
    v = v * 10 + (ch - '0');
  }
  return v;
}

}  // namespace

ModElem ModElem::monomial(ParamsPtr params, Label label, int n, int m, int t, const Rational& c) {
  check_slot(label, t);
  if (n < 0 || m < 0) throw std::invalid_argument("negative exponent");
  ModElem e(std::move(params), label);
  e.add_term({n, m, t}, c);
  return e;
}

ModElem ModElem::generator(ParamsPtr params, Label label, int slot) {
  return monomial(std::move(params), label, 0, 0, slot);
}

Rational ModElem::coeff(const Mono& mono) const {
  auto it = terms().find(mono);
  return it == terms().end() ? Rational(0) : it->second;
}

int ModElem::degree() const {
  int d = -1;
  for (const auto& [mono, c] : terms()) d = std::max(d, mono.degree());
  return d;
}

std::string slot_name(const Label& label, int slot) {
  if (label.kind != LabelKind::Pair) return "T";
  return slot == 0 ? "T1" : "T2";
}

std::string ModElem::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    const std::string mon = monomial_text(mono.n, mono.m);
    if (!mon.empty()) os << "*" << mon;
    os << " (x) v" << slot_name(label(), mono.t);
  }
  return os.str();
}

std::string ModElem::input_str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    const std::string mon = monomial_text(mono.n, mono.m);
    if (!mon.empty()) os << "*" << mon;
    os << "@" << slot_name(label(), mono.t);
  }
  return os.str();
}

ModElem ModElem::parse(ParamsPtr params, Label label, std::string_view text) {
  ModElem out(std::move(params), label);
  const std::string_view whole = text;
  text = trim(text);
  if (text == "0") return out;
  if (text.empty()) throw std::invalid_argument("empty element");

  // Split at '+' and at a '-' that starts a new term.
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    const bool starts_term = ch == '+' || (ch == '-' && !cur.empty() && cur.back() != '*' &&
                                           cur.back() != '^' && cur.back() != '/');
    if (starts_term) {
      if (cur.empty()) throw std::invalid_argument("dangling sign in '" + std::string(whole) + "'");
      terms.push_back(cur);
      cur = ch == '-' ? "-" : "";
    } else {
      cur += ch;
    }
  }
  if (cur.empty() || cur == "-") throw std::invalid_argument("dangling sign in '" + std::string(whole) + "'");
  terms.push_back(cur);

  for (const std::string& term : terms) {
    std::string_view body = term;
    int slot = 0;
    const auto at = body.find('@');
    if (at != std::string_view::npos) {
      const std::string_view s = body.substr(at + 1);
      body = body.substr(0, at);
      if (label.kind == LabelKind::Pair && s == "T1") slot = 0;
      else if (label.kind == LabelKind::Pair && s == "T2") slot = 1;
      else if (label.kind != LabelKind::Pair && s == "T") slot = 0;
      else throw std::invalid_argument("slot '" + std::string(s) + "' invalid for " + label.str());
    } else if (label.kind == LabelKind::Pair) {
      throw std::invalid_argument("term '" + term + "' needs @T1 or @T2 for " + label.str());
    }

    Rational c(1);
    int n = 0, m = 0;
    bool have_coeff = false;
    std::size_t pos = 0;
    if (!body.empty() && body[0] == '-') {
      c = Rational(-1);
      body.remove_prefix(1);
    }
    while (pos <= body.size()) {
      const auto star = body.find('*', pos);
      const std::string_view factor =
          body.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
      if (factor.empty()) throw std::invalid_argument("empty factor in '" + term + "'");
      if (factor.rfind("x1", 0) == 0 || factor.rfind("x2", 0) == 0) {
        int e = 1;
        if (factor.size() > 2) {
          if (factor[2] != '^') throw std::invalid_argument("bad factor '" + std::string(factor) + "'");
          e = parse_exponent(factor.substr(3), term);
        }
        (factor[1] == '1' ? n : m) += e;
      } else {
        if (have_coeff) throw std::invalid_argument("two coefficients in '" + term + "'");
        c *= Rational::parse(factor);
        have_coeff = true;
      }
      if (star == std::string_view::npos) break;
      pos = star + 1;
    }
    out.add_term({n, m, slot}, c);
  }
  return out;
}

ModElem operator*(const Rational& c, ModElem e) {
  e.scale(c);
  return e;
}

CycloModElem CycloModElem::from_rational(const ModElem& e) {
  CycloModElem out(e.params_ptr(), e.label());
  const int r = e.params().r();
  for (const auto& [mono, c] : e.terms()) out.add_term(mono, CycloNum(r, c));
  return out;
}

ModElem CycloModElem::to_rational() const {
  ModElem out(params_ptr(), label());
  for (const auto& [mono, c] : terms()) out.add_term(mono, c.to_rational());
  return out;
}

ModElem x_mul(const ModElem& e, int n, int m, const Rational& c) {
  ModElem out(e.params_ptr(), e.label());
  if (c.is_zero()) return out;
  for (const auto& [mono, v] : e.terms()) out.add_term({mono.n + n, mono.m + m, mono.t}, v * c);
  return out;
}

CycloModElem x_mul(const CycloModElem& e, int n, int m, const CycloNum& c) {
  CycloModElem out(e.params_ptr(), e.label());
  if (c.is_zero()) return out;
  for (const auto& [mono, v] : e.terms()) out.add_term({mono.n + n, mono.m + m, mono.t}, v * c);
  return out;
}

CycloModElem w_act(const CycloModElem& e, const GroupElement& g) {
  if (g.r != e.params().r()) throw std::invalid_argument("w_act: group element for wrong r");
  CycloModElem out(e.params_ptr(), e.label());
  for (const auto& [mono, v] : e.terms()) {
    const MonomialImage mi = act_on_monomial(g, mono.n, mono.m);
    const SlotImage si = act_on_slot(e.label(), g, mono.t);
    CycloNum c = v * CycloNum::zeta_pow(g.r, mi.zeta_exp + si.zeta_exp);
    if (si.sign < 0) c = -c;
    out.add_term({mi.n, mi.m, si.slot}, c);
  }
  return out;
}

ModElem w_act(const ModElem& e, const GroupElement& g) {
  return w_act(CycloModElem::from_rational(e), g).to_rational();
}

ModElem y_act(const ModElem& e, int axis) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("y_act: axis must be 1 or 2");
  ModElem out(e.params_ptr(), e.label());
  for (const auto& [mono, v] : e.terms()) {
    y_closed_form<Rational>(e.params(), e.label(), axis, mono.n, mono.m, mono.t,
                            [&](int n, int m, int t, const Rational& c) { out.add_term({n, m, t}, v * c); });
  }
  return out;
}

bool is_singular(const ModElem& e) { return y_act(e, 1).is_zero() && y_act(e, 2).is_zero(); }

ModElem homogeneous_component(const ModElem& e, int degree) {
  if (degree < 0) throw std::invalid_argument("homogeneous_component: negative degree");
  ModElem out(e.params_ptr(), e.label());
  for (const auto& [mono, v] : e.terms())
    if (mono.degree() == degree) out.add_term(mono, v);
  return out;
}

ModElem normalized(const ModElem& e) {
  if (e.is_zero()) return e;
  return inverse(e.terms().begin()->second) * e;
}

}  // namespace cherednik
