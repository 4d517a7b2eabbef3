#include "cherednik/labels.hpp"

#include <charconv>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

Params::Params(int r, Rational c0, std::vector<Rational> d)
    : r_(r), c0_(std::move(c0)), d_(std::move(d)) {
  if (r_ < 1) throw InvalidParams("r must be positive");
  if (static_cast<int>(d_.size()) != r_)
    throw InvalidParams("expected " + std::to_string(r_) + " d values, got " +
                        std::to_string(d_.size()));
  Rational sum;
  for (const auto& x : d_) sum += x;
  if (!sum.is_zero()) throw InvalidParams("d values must sum to 0 (sum is " + sum.str() + ")");
}

const Rational& Params::d(long k) const { return d_[static_cast<std::size_t>(mod_r(k, r_))]; }

std::string Params::digest() const {
  std::ostringstream os;
  os << "r=" << r_ << ";c0=" << c0_ << ";d=";
  for (std::size_t k = 0; k < d_.size(); ++k) os << (k ? "," : "") << d_[k];
  return os.str();
}

Label Label::pair(int a, int b) {
  if (a == b) throw InvalidLabel("pair label needs distinct components");
  return a < b ? Label{LabelKind::Pair, a, b} : Label{LabelKind::Pair, b, a};
}

namespace {

int parse_index(std::string_view s, int r, std::string_view whole) {
  int v = -1;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0 || v >= r)
    throw InvalidLabel("bad label index in '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Label Label::parse(std::string_view text, int r) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidLabel("malformed label '" + std::string(text) + "'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (kind == "row") return row(parse_index(rest, r, text));
  if (kind == "col") return col(parse_index(rest, r, text));
  if (kind == "pair") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw InvalidLabel("malformed label '" + std::string(text) + "'");
    return pair(parse_index(rest.substr(0, comma), r, text), parse_index(rest.substr(comma + 1), r, text));
  }
  throw InvalidLabel("unknown label kind in '" + std::string(text) + "'");
}

std::string Label::str() const {
  switch (kind) {
    case LabelKind::Row: return "row:" + std::to_string(i);
    case LabelKind::Col: return "col:" + std::to_string(i);
    case LabelKind::Pair: return "pair:" + std::to_string(i) + "," + std::to_string(j);
  }
  return {};
}

std::vector<Label> enumerate_labels(int r) {
  std::vector<Label> out;
  for (int i = 0; i < r; ++i) out.push_back(Label::row(i));
  for (int i = 0; i < r; ++i) out.push_back(Label::col(i));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) out.push_back(Label::pair(i, j));
  return out;
}

std::vector<Tableau> tableaux(const Label& label) {
  switch (label.kind) {
    case LabelKind::Row: return {Tableau{{Box{label.i, 0, 0}, Box{label.i, 0, 1}}}};
    case LabelKind::Col: return {Tableau{{Box{label.i, 0, 0}, Box{label.i, 1, 0}}}};
    case LabelKind::Pair:
      return {Tableau{{Box{label.i, 0, 0}, Box{label.j, 0, 0}}},
              Tableau{{Box{label.j, 0, 0}, Box{label.i, 0, 0}}}};
  }
  return {};
}

Rational charged_content(const Box& box, const Params& p) {
  return Rational(box.content()) * Rational(p.r()) * p.c0() + p.d(box.component);
}

GroupElement GroupElement::diag(int r, long a, long b) {
  return {r, static_cast<int>(mod_r(a, r)), static_cast<int>(mod_r(b, r)), false};
}

GroupElement GroupElement::zeta_axis(int r, int axis, long k) {
  return axis == 1 ? diag(r, k, 0) : diag(r, 0, k);
}

GroupElement GroupElement::inverse() const {
  if (!swap) return diag(r, -a, -b);
  // (D P)^{-1} = P D^{-1} = diag(-b, -a) P
  GroupElement g = diag(r, -b, -a);
  g.swap = true;
  return g;
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  if (g.r != h.r) throw std::invalid_argument("GroupElement: mismatched r");
  // P diag(c, d) = diag(d, c) P
  const int ha = g.swap ? h.b : h.a;
  const int hb = g.swap ? h.a : h.b;
  GroupElement out = GroupElement::diag(g.r, g.a + ha, g.b + hb);
  out.swap = g.swap != h.swap;
  return out;
}

std::string GroupElement::str() const {
  return "diag(z^" + std::to_string(a) + ",z^" + std::to_string(b) + ")" + (swap ? "*s" : "");
}

std::vector<GroupElement> group_elements(int r) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(2 * r * r));
  for (int s = 0; s < 2; ++s)
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) out.push_back({r, a, b, s == 1});
  return out;
}

std::array<int, 2> slot_weight(const Label& label, int slot) {
  if (label.kind != LabelKind::Pair) return {label.i, label.i};
  return slot == 0 ? std::array<int, 2>{label.i, label.j} : std::array<int, 2>{label.j, label.i};
}

SlotImage act_on_slot(const Label& label, const GroupElement& g, int slot) {
  SlotImage out{slot, 0, 1};
  if (g.swap) {
    if (label.kind == LabelKind::Col) out.sign = -1;
    if (label.kind == LabelKind::Pair) out.slot = 1 - slot;
  }
  const auto w = slot_weight(label, out.slot);
  out.zeta_exp = static_cast<long>(w[0]) * g.a + static_cast<long>(w[1]) * g.b;
  return out;
}

MonomialImage act_on_monomial(const GroupElement& g, int n, int m) {
  MonomialImage out{n, m, 0};
  if (g.swap) std::swap(out.n, out.m);
  out.zeta_exp = -static_cast<long>(g.a) * out.n - static_cast<long>(g.b) * out.m;
  return out;
}

std::vector<CycloNum> w_act_on_rep(const Label& label, const GroupElement& g,
                                   const std::vector<CycloNum>& v) {
  if (static_cast<int>(v.size()) != label.dim())
    throw std::invalid_argument("w_act_on_rep: vector has dimension " + std::to_string(v.size()) +
                                ", label " + label.str() + " needs " + std::to_string(label.dim()));
  std::vector<CycloNum> out(v.size(), CycloNum(g.r));
  for (int t = 0; t < label.dim(); ++t) {
    const SlotImage img = act_on_slot(label, g, t);
    CycloNum c = v[static_cast<std::size_t>(t)] * CycloNum::zeta_pow(g.r, img.zeta_exp);
    if (img.sign < 0) c = -c;
    out[static_cast<std::size_t>(img.slot)] += c;
  }
  return out;
}

CycloNum character(const Label& label, const GroupElement& g) {
  CycloNum tr(g.r);
  for (int t = 0; t < label.dim(); ++t) {
    const SlotImage img = act_on_slot(label, g, t);
    if (img.slot != t) continue;
    CycloNum c = CycloNum::zeta_pow(g.r, img.zeta_exp);
    tr += img.sign < 0 ? -c : c;
  }
  return tr;
}

}  // namespace cherednik
