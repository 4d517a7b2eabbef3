#include "cherednik/singular_constructors.hpp"

#include <array>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "cherednik/errors.hpp"
#include "cherednik/qpoly.hpp"

namespace cherednik {

namespace {

constexpr std::array<std::pair<Family, const char*>, 12> kFamilyNames{{
    {Family::RowA, "RowA"},     {Family::RowB, "RowB"},     {Family::RowC, "RowC"},
    {Family::ColA, "ColA"},     {Family::ColB, "ColB"},     {Family::ColC, "ColC"},
    {Family::Pair1a, "Pair1a"}, {Family::Pair1b, "Pair1b"}, {Family::Pair2a, "Pair2a"},
    {Family::Pair2b, "Pair2b"}, {Family::Pair3a, "Pair3a"}, {Family::Pair3b, "Pair3b"},
}};

bool is_row_family(Family f) { return f == Family::RowA || f == Family::RowB || f == Family::RowC; }
bool is_col_family(Family f) { return f == Family::ColA || f == Family::ColB || f == Family::ColC; }

/// n - d_i + d_{i-n} + shift == 0
bool diagonal_vanishes(const Params& p, long i, long n, const Rational& shift) {
  return (Rational(n) - p.d(i) + p.d(i - n) + shift).is_zero();
}

/// prod_{t=0}^{upto} (c0 - sign t) / (c0 - sign (k - t)); empty product for upto < 0.
CoeffExpr beta(int k, int upto, int sign) {
  CoeffExpr e;
  for (int t = 0; t <= upto; ++t) {
    e *= CoeffExpr::linear(Rational(sign * t));
    e /= CoeffExpr::linear(Rational(sign * (k - t)));
  }
  return e;
}

/// Printed form C(k,p) beta_{p-1}, used for the low half of the blocks.
CoeffExpr low_form(int k, int p, int sign) { return CoeffExpr(binomial(k, p)) * beta(k, p - 1, sign); }

/// Printed form C(k,k-p) beta_{k-p}, used for the high half of the blocks.
CoeffExpr high_form(int k, int p, int sign) { return CoeffExpr(binomial(k, k - p)) * beta(k, k - p, sign); }

struct Builder {
  std::vector<Mono> monos;
  std::vector<CoeffExpr> exprs;
  std::vector<std::string> names;
  void add(Mono mono, CoeffExpr e, std::string name = {}) {
    monos.push_back(mono);
    exprs.push_back(std::move(e));
    names.push_back(std::move(name));
  }
  SingularResult finish(const ParamsPtr& p, const Label& label, const CaseTag& tag) const {
    const ClearedValues cv = evaluate_cleared(exprs, p->c0());
    SingularResult res{ModElem(p, label), tag, {}, cv.power};
    for (std::size_t k = 0; k < monos.size(); ++k) {
      res.elem.add_term(monos[k], cv.values[k]);
      if (!names[k].empty()) res.ledger.emplace_back(names[k], cv.values[k]);
    }
    return res;
  }
};

void require(bool ok, const CaseTag& tag, const Label& label) {
  if (!ok) throw InapplicableCase("case " + tag.str() + " does not apply to " + label.str());
}

template <class F>
struct RecSolution {
  std::vector<F> a, b;
};

/// The two sum formulas of the recursive system with leading coefficient `lead`.
template <class F>
struct RecRelations {
  const std::vector<F>& s;
  F c0;
  F c0r;
  int r;
  int k;
  F lead;
  RecSolution<F>& sol;

  const F& S(int t) const { return s[static_cast<std::size_t>(t - 1)]; }
  F& A(int l) const { return sol.a[static_cast<std::size_t>(l - 1)]; }
  F& B(int l) const { return sol.b[static_cast<std::size_t>(l - 1)]; }
  [[noreturn]] static void fail(const std::string& what) {
    throw InconsistentSystem("recursive system: " + what + " fails");
  }
  // s_l a_l = c0 r (sum_{j<l} (k-2j)/j b_{k-j} + lead)
  F a_rhs(int l) const {
    F acc = lead;
    for (int j = 1; j <= l - 1; ++j) acc = acc + F(Rational(k - 2 * j, j)) * B(k - j);
    return c0r * acc;
  }
  // l b_l = c0 sum_{j<l} (k-2j-1) r / s_{k-j} a_{j+1}
  F b_rhs(int l) const {
    F acc = F(Rational(0));
    for (int j = 0; j <= l - 1; ++j) {
      if (k - 2 * j - 1 == 0) continue;
      if (S(k - j).is_zero()) {
        if (!A(j + 1).is_zero()) fail("b-sum formula (division by vanishing s)");
        continue;
      }
      acc = acc + F(Rational((k - 2 * j - 1) * r)) / S(k - j) * A(j + 1);
    }
    return c0 * acc;
  }
  // Every relation family over its full index range, in multiplied-out form.
  void verify(int free_index) const {
    if (!(S(1) * A(1) == c0r * lead) && free_index != 1) fail("s1 a1 = c0 r");
    for (int l = 1; l <= k; ++l) {
      if (!(S(l) * A(l) == S(k - l + 1) * A(k - l + 1))) fail("s_l a_l symmetry at l=" + std::to_string(l));
      if (!(S(l) * A(l) == a_rhs(l))) fail("a-sum formula at l=" + std::to_string(l));
    }
    for (int l = 1; l <= k - 1; ++l) {
      if (!(F(Rational(l)) * B(l) == F(Rational(k - l)) * B(k - l))) fail("b symmetry at l=" + std::to_string(l));
      if (!(F(Rational(l)) * B(l) == b_rhs(l))) fail("b-sum formula at l=" + std::to_string(l));
    }
  }
};

template <class F>
RecRelations<F> relations(const std::vector<F>& s, const Rational& c0, int r, int k, const F& lead,
                          RecSolution<F>& sol) {
  return RecRelations<F>{s, F(c0), F(c0 * Rational(r)), r, k, lead, sol};
}

/// Solves the recursive system with leading coefficient `lead`. When
/// free_index is nonzero, a_{free_index} is fixed to 1 instead of being
/// computed, which is how the vanishing-s_t direction is isolated.
template <class F>
RecSolution<F> solve_rec(const std::vector<F>& s, const Rational& c0, int r, int k, const F& lead, int free_index) {
  RecSolution<F> out;
  out.a.resize(static_cast<std::size_t>(k), F(Rational(0)));
  out.b.resize(static_cast<std::size_t>(std::max(k - 1, 0)), F(Rational(0)));
  if (k == 0) return out;
  const auto rel = relations(s, c0, r, k, lead, out);
  std::vector<bool> have_a(out.a.size(), false), have_b(out.b.size(), false);
  if (free_index > 0) {
    rel.A(free_index) = F(Rational(1));
    have_a[static_cast<std::size_t>(free_index - 1)] = true;
  }
  for (int l = 1; l <= k; ++l) {
    if (!have_a[static_cast<std::size_t>(l - 1)]) {
      rel.A(l) = rel.a_rhs(l) / rel.S(l);
      have_a[static_cast<std::size_t>(l - 1)] = true;
    }
    const int mirror = k - l + 1;
    if (!have_a[static_cast<std::size_t>(mirror - 1)]) {
      rel.A(mirror) = rel.S(l) * rel.A(l) / rel.S(mirror);
      have_a[static_cast<std::size_t>(mirror - 1)] = true;
    }
    if (l <= k - 1 && !have_b[static_cast<std::size_t>(l - 1)]) {
      rel.B(l) = rel.b_rhs(l) / F(Rational(l));
      have_b[static_cast<std::size_t>(l - 1)] = true;
    }
    const int partner = k - l;
    if (l <= k - 1 && partner >= 1 && !have_b[static_cast<std::size_t>(partner - 1)]) {
      rel.B(partner) = F(Rational(l, partner)) * rel.B(l);
      have_b[static_cast<std::size_t>(partner - 1)] = true;
    }
  }
  rel.verify(free_index);
  return out;
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (name == n) return fam;
  return std::nullopt;
}

std::string CaseTag::str() const {
  return family_name(family) + ",n=" + std::to_string(n) + ",k=" + std::to_string(k);
}

CaseTag CaseTag::parse(std::string_view text) {
  const auto bad = [&] { return std::invalid_argument("bad case tag '" + std::string(text) + "'"); };
  CaseTag tag;
  const auto c1 = text.find(',');
  const auto fam = parse_family(text.substr(0, c1));
  if (!fam) throw bad();
  tag.family = *fam;
  bool have_n = false, have_k = false;
  std::string_view rest = c1 == std::string_view::npos ? std::string_view{} : text.substr(c1 + 1);
  while (!rest.empty()) {
    const auto c = rest.find(',');
    const std::string_view kv = rest.substr(0, c);
    rest = c == std::string_view::npos ? std::string_view{} : rest.substr(c + 1);
    if (kv.size() < 3 || kv[1] != '=') throw bad();
    int v = 0;
    auto [ptr, ec] = std::from_chars(kv.data() + 2, kv.data() + kv.size(), v);
    if (ec != std::errc() || ptr != kv.data() + kv.size()) throw bad();
    if (kv[0] == 'n') { tag.n = v; have_n = true; }
    else if (kv[0] == 'k') { tag.k = v; have_k = true; }
    else throw bad();
  }
  if (!have_n || !have_k) throw bad();
  return tag;
}

bool case_applies(const Params& p, const Label& label, const CaseTag& tag) {
  const int r = p.r();
  const int n = tag.n, k = tag.k;
  const Rational rc0 = Rational(r) * p.c0();
  if (n < 1 || k < 0) return false;
  switch (tag.family) {
    case Family::RowA:
    case Family::ColA: {
      if (label.kind != (tag.family == Family::RowA ? LabelKind::Row : LabelKind::Col)) return false;
      const Rational half = tag.family == Family::RowA ? p.c0() : -p.c0();
      return k % 2 == 1 && n == k * r && Rational(2) * half == Rational(k);
    }
    case Family::RowB:
    case Family::ColB:
      if (label.kind != (tag.family == Family::RowB ? LabelKind::Row : LabelKind::Col)) return false;
      return k == 0 && diagonal_vanishes(p, label.i, n, Rational(0));
    case Family::RowC:
    case Family::ColC: {
      if (label.kind != (tag.family == Family::RowC ? LabelKind::Row : LabelKind::Col)) return false;
      const Rational shift = tag.family == Family::RowC ? -rc0 : rc0;
      return n % r != 0 && n / r == k && diagonal_vanishes(p, label.i, n, shift);
    }
    default: break;
  }
  if (label.kind != LabelKind::Pair) return false;
  const long i = label.i, j = label.j;
  switch (tag.family) {
    case Family::Pair1a:
      return mod_r(n + j - i, r) != 0 && floor_div(n + j - i, r) == k && diagonal_vanishes(p, i, n, Rational(0));
    case Family::Pair1b:
      return mod_r(n + i - j, r) != 0 && floor_div(n + i - j, r) + 1 == k && diagonal_vanishes(p, j, n, Rational(0));
    case Family::Pair2a:
      return n == i - j + (k + 1) * r && Rational(n) == p.d(i) - p.d(j) + rc0;
    case Family::Pair2b:
      return n == j - i + k * r && Rational(n) == p.d(j) - p.d(i) + rc0;
    case Family::Pair3a:
      return n == i - j + (k + 1) * r && Rational(n) == p.d(i) - p.d(j) - rc0;
    case Family::Pair3b:
      return n == j - i + k * r && Rational(n) == p.d(j) - p.d(i) - rc0;
    default: return false;
  }
}

std::vector<CaseTag> applicable_cases(const Params& p, const Label& label, int max_n) {
  std::vector<CaseTag> out;
  const int r = p.r();
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& [fam, name] : kFamilyNames) {
      std::vector<int> ks;
      switch (fam) {
        case Family::RowA:
        case Family::ColA:
          if (n % r == 0) ks.push_back(n / r);
          break;
        case Family::RowB:
        case Family::ColB: ks.push_back(0); break;
        case Family::RowC:
        case Family::ColC: ks.push_back(n / r); break;
        case Family::Pair1a: ks.push_back(static_cast<int>(floor_div(n + label.j - label.i, r))); break;
        case Family::Pair1b: ks.push_back(static_cast<int>(floor_div(n + label.i - label.j, r)) + 1); break;
        case Family::Pair2a:
        case Family::Pair3a: ks.push_back(static_cast<int>(floor_div(n - label.i + label.j, r)) - 1); break;
        case Family::Pair2b:
        case Family::Pair3b: ks.push_back(static_cast<int>(floor_div(n - label.j + label.i, r))); break;
      }
      for (int k : ks) {
        const CaseTag tag{fam, n, k};
        if (case_applies(p, label, tag)) out.push_back(tag);
      }
    }
  }
  return out;
}

CoeffExpr block_coefficient(int k, int l, int sign) { return low_form(k, l, sign); }

namespace {

SingularResult sing_one_dim(const ParamsPtr& p, const Label& label, const CaseTag& tag, int sign) {
  require(case_applies(*p, label, tag), tag, label);
  const int r = p->r();
  Builder bld;
  switch (tag.family) {
    case Family::RowA:
    case Family::ColA:
      // (x1^r - x2^r)^k
      for (int l = 0; l <= tag.k; ++l) {
        Rational c = binomial(tag.k, l);
        if (l % 2 == 1) c = -c;
        bld.add({(tag.k - l) * r, l * r, 0}, CoeffExpr(c));
      }
      break;
    case Family::RowB:
    case Family::ColB: bld.add({tag.n, tag.n, 0}, CoeffExpr(1)); break;
    default: {
      const int k = tag.k;
      bld.add({tag.n, 0, 0}, CoeffExpr(1));
      for (int q = 1; q <= (k - 1) / 2; ++q)
        bld.add({tag.n - q * r, q * r, 0}, low_form(k, q, sign), "coef_x2^" + std::to_string(q * r));
      for (int l = 0; l <= k / 2; ++l) {
        const int q = k - l;
        if (q == 0) continue;  // the k = 0 summand repeats x1^n
        bld.add({tag.n - q * r, q * r, 0}, high_form(k, q, sign), "coef_x2^" + std::to_string(q * r));
      }
    }
  }
  return bld.finish(p, label, tag);
}

}  // namespace

SingularResult sing_row(const ParamsPtr& p, int i, const CaseTag& tag) {
  if (!is_row_family(tag.family)) throw InapplicableCase("case " + tag.str() + " is not a row clause");
  return sing_one_dim(p, Label::row(i), tag, +1);
}

SingularResult sing_col(const ParamsPtr& p, int i, const CaseTag& tag) {
  if (!is_col_family(tag.family)) throw InapplicableCase("case " + tag.str() + " is not a column clause");
  return sing_one_dim(p, Label::col(i), tag, -1);
}

RecSystem solve_rec_system(const Params& p, int i, int j, PairVariant variant, int n, int k) {
  if (i >= j) throw std::invalid_argument("solve_rec_system: needs i < j");
  const int r = p.r();
  RecSystem sys;
  sys.k = k;
  for (int t = 1; t <= k; ++t) {
    const Rational st = variant == PairVariant::A ? Rational(j - i) - p.d(j) + p.d(i) - Rational(t * r)
                                                  : Rational(i - j) - p.d(i) + p.d(j) - Rational((t - 1) * r);
    sys.s.push_back(st);
    if (st.is_zero()) sys.vanishing = t;
  }
  (void)n;
  if (sys.vanishing == 0) {
    const auto sol = solve_rec<Rational>(sys.s, p.c0(), r, k, Rational(1), 0);
    sys.a = sol.a;
    sys.b = sol.b;
    return sys;
  }
  // Replace the vanishing s_t by a formal eps and solve over Q(eps).
  std::vector<RatFunc> s;
  for (int t = 1; t <= k; ++t)
    s.push_back(t == sys.vanishing ? RatFunc::variable() : RatFunc(sys.s[static_cast<std::size_t>(t - 1)]));
  const auto sol = solve_rec<RatFunc>(s, p.c0(), r, k, RatFunc(Rational(1)), 0);
  long lowest = 0;
  for (const auto* vec : {&sol.a, &sol.b})
    for (const auto& f : *vec)
      if (!f.is_zero()) lowest = std::min(lowest, f.order_at_zero());
  if (lowest < 0) {
    // A genuine pole: keep the leading part of eps^power * p.
    sys.mode = RecSystem::Mode::Residue;
    sys.clearing_power = static_cast<int>(-lowest);
    for (const auto& f : sol.a) sys.a.push_back(f.laurent_coeff(lowest));
    for (const auto& f : sol.b) sys.b.push_back(f.laurent_coeff(lowest));
    return sys;
  }
  // No pole: a_t is unconstrained at s_t = 0, and s_t * p keeps only its direction.
  try {
    const auto iso = solve_rec<Rational>(sys.s, p.c0(), r, k, Rational(0), sys.vanishing);
    sys.mode = RecSystem::Mode::FreeDirection;
    sys.clearing_power = 1;
    sys.a = iso.a;
    sys.b = iso.b;
    return sys;
  } catch (const InconsistentSystem&) {
  }
  // The free direction fails the system: p itself has a finite value at s_t = 0.
  sys.mode = RecSystem::Mode::Limit;
  for (const auto& f : sol.a) sys.a.push_back(f.laurent_coeff(0));
  for (const auto& f : sol.b) sys.b.push_back(f.laurent_coeff(0));
  RecSolution<Rational> limit{sys.a, sys.b};
  relations(sys.s, p.c0(), r, k, Rational(1), limit).verify(0);
  return sys;
}

SingularResult sing_pair(const ParamsPtr& p, int i, int j, const CaseTag& tag) {
  if (i >= j) throw std::invalid_argument("sing_pair: needs i < j");
  const Label label = Label::pair(i, j);
  require(case_applies(*p, label, tag), tag, label);
  const int r = p->r();
  const int n = tag.n, k = tag.k, gap = j - i;
  SingularResult res{ModElem(p, label), tag, {}, 0};

  if (tag.family == Family::Pair1a || tag.family == Family::Pair1b) {
    const bool va = tag.family == Family::Pair1a;
    const RecSystem sys = solve_rec_system(*p, i, j, va ? PairVariant::A : PairVariant::B, n, k);
    // The leading monomial carries s_t^power, which vanishes in the limit.
    const bool unit_lead = sys.mode == RecSystem::Mode::Regular || sys.mode == RecSystem::Mode::Limit;
    const Rational lead = unit_lead ? Rational(1) : Rational(0);
    if (va) {
      res.elem.add_term({n, 0, 0}, lead);
      for (int l = 1; l <= k - 1; ++l) res.elem.add_term({n - l * r, l * r, 0}, sys.b[static_cast<std::size_t>(l - 1)]);
      for (int l = 1; l <= k; ++l)
        res.elem.add_term({n - l * r + gap, l * r - gap, 1}, sys.a[static_cast<std::size_t>(l - 1)]);
    } else {
      res.elem.add_term({0, n, 0}, lead);
      for (int l = 1; l <= k - 1; ++l) res.elem.add_term({l * r, n - l * r, 0}, sys.b[static_cast<std::size_t>(l - 1)]);
      for (int l = 0; l <= k - 1; ++l)
        res.elem.add_term({l * r + gap, n - l * r - gap, 1}, sys.a[static_cast<std::size_t>(l)]);
    }
    for (int t = 1; t <= k; ++t) res.ledger.emplace_back("s" + std::to_string(t), sys.s[static_cast<std::size_t>(t - 1)]);
    for (int l = 1; l <= k; ++l) res.ledger.emplace_back("a" + std::to_string(l), sys.a[static_cast<std::size_t>(l - 1)]);
    for (int l = 1; l <= k - 1; ++l) res.ledger.emplace_back("b" + std::to_string(l), sys.b[static_cast<std::size_t>(l - 1)]);
    res.clearing_power = sys.clearing_power;
    return res;
  }

  // Closed-form families: family 2 alternates signs between the two slots, family 3 adds.
  const bool fam2 = tag.family == Family::Pair2a || tag.family == Family::Pair2b;
  const bool variant_a = tag.family == Family::Pair2a || tag.family == Family::Pair3a;
  const int sign = fam2 ? +1 : -1;
  const Rational partner_sign = fam2 ? Rational(-1) : Rational(1);
  // Variant a leads with x1^n on v_T1, variant b with x1^n on v_T2.
  const int lead_slot = variant_a ? 0 : 1;
  const int other_slot = 1 - lead_slot;
  Builder bld;
  bld.add({n, 0, lead_slot}, CoeffExpr(1));
  bld.add({0, n, other_slot}, CoeffExpr(partner_sign));
  for (int l = 1; l <= k; ++l) {
    const CoeffExpr a = l <= (k + 1) / 2 ? low_form(k, l, sign) : high_form(k, l, sign);
    bld.add({n - r * l, r * l, lead_slot}, a, "a" + std::to_string(l));
    bld.add({r * l, n - r * l, other_slot}, a * CoeffExpr(partner_sign));
  }
  return bld.finish(p, label, tag);
}

SingularResult construct_singular(const ParamsPtr& p, const Label& label, const CaseTag& tag) {
  switch (label.kind) {
    case LabelKind::Row: return sing_row(p, label.i, tag);
    case LabelKind::Col: return sing_col(p, label.i, tag);
    case LabelKind::Pair: return sing_pair(p, label.i, label.j, tag);
  }
  throw InvalidLabel("unknown label kind");
}

}  // namespace cherednik
