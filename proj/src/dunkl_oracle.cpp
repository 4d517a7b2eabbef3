#include "cherednik/dunkl_oracle.hpp"

#include <stdexcept>

namespace cherednik {

namespace {

void add_to(CycloPoly& f, std::pair<int, int> key, const CycloNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = f.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

CycloPoly swap_vars(const CycloPoly& f) {
  CycloPoly out;
  for (const auto& [k, c] : f) out.emplace(std::pair{k.second, k.first}, c);
  return out;
}

/// Exact division by x1 - c x2, eliminating the highest x1 power first.
CycloPoly divide_linear(CycloPoly g, const CycloNum& c) {
  CycloPoly q;
  while (!g.empty() && g.rbegin()->first.first >= 1) {
    const auto node = g.extract(std::prev(g.end()));
    const auto [p, s] = node.key();
    const CycloNum& a = node.mapped();
    add_to(q, {p - 1, s}, a);
    add_to(g, {p - 1, s + 1}, a * c);
  }
  if (!g.empty()) throw std::logic_error("divided_diff: reflected difference is not divisible");
  return q;
}

std::vector<CycloNum> slot_vector(int r, const Label& label, int t) {
  std::vector<CycloNum> v(static_cast<std::size_t>(label.dim()), CycloNum(r));
  v[static_cast<std::size_t>(t)] = CycloNum(r, Rational(1));
  return v;
}

}  // namespace

GroupElement oracle_reflection(int r, long l, int axis) {
  GroupElement g = axis == 1 ? GroupElement::diag(r, l, -l) : GroupElement::diag(r, -l, l);
  g.swap = true;
  return g;
}

CycloPoly reflect(const CycloPoly& f, int r, long l, int axis) {
  // x1 -> z^l x2, x2 -> z^-l x1 for axis 1; inverse powers for axis 2.
  const long sgn = axis == 1 ? 1 : -1;
  CycloPoly out;
  for (const auto& [k, c] : f)
    add_to(out, {k.second, k.first}, c * CycloNum::zeta_pow(r, sgn * l * (k.first - k.second)));
  return out;
}

CycloPoly divided_diff(const CycloPoly& f, int r, long l, int axis) {
  CycloPoly g;
  for (const auto& [k, c] : f) add_to(g, k, c);
  for (const auto& [k, c] : reflect(f, r, l, axis)) add_to(g, k, -c);
  const CycloNum zl = CycloNum::zeta_pow(r, l);
  if (axis == 1) return divide_linear(std::move(g), zl);
  return swap_vars(divide_linear(swap_vars(g), zl));
}

CycloModElem y_act_oracle_cyclo(const ModElem& e, int axis) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("y_act_oracle: axis must be 1 or 2");
  const Params& p = e.params();
  const int r = p.r();
  const Label& label = e.label();
  CycloModElem out(e.params_ptr(), label);
  const CycloNum c0(r, p.c0());

  for (const auto& [mono, q] : e.terms()) {
    const CycloNum coeff(r, q);
    const std::vector<CycloNum> v = slot_vector(r, label, mono.t);
    const int own = axis == 1 ? mono.n : mono.m;

    // x_axis^{own-1} (own - sum_j d_j/r sum_l z^{-lj}(1 - z^{-l own}) zeta_axis^l) v
    if (own >= 1) {
      std::vector<CycloNum> acc(v.size(), CycloNum(r));
      for (std::size_t s = 0; s < v.size(); ++s) acc[s] = v[s] * Rational(own);
      for (long l = 0; l < r; ++l) {
        const auto moved = w_act_on_rep(label, GroupElement::zeta_axis(r, axis, l), v);
        CycloNum weight(r);
        for (long j = 0; j < r; ++j) {
          const CycloNum term = CycloNum::zeta_pow(r, -l * j) * (CycloNum(r, Rational(1)) - CycloNum::zeta_pow(r, -l * own));
          weight += term * (p.d(j) / Rational(r));
        }
        for (std::size_t s = 0; s < v.size(); ++s) acc[s] -= weight * moved[s];
      }
      const int n1 = axis == 1 ? mono.n - 1 : mono.n;
      const int m1 = axis == 1 ? mono.m : mono.m - 1;
      for (std::size_t s = 0; s < acc.size(); ++s)
        out.add_term({n1, m1, static_cast<int>(s)}, coeff * acc[s]);
    }

    // -c0 sum_l (f - s_l f)/(linear form) (x) s_l v
    CycloPoly f;
    f.emplace(std::pair{mono.n, mono.m}, CycloNum(r, Rational(1)));
    for (long l = 0; l < r; ++l) {
      const CycloPoly dd = divided_diff(f, r, l, axis);
      if (dd.empty()) continue;
      const auto moved = w_act_on_rep(label, oracle_reflection(r, l, axis), v);
      for (const auto& [k, c] : dd)
        for (std::size_t s = 0; s < moved.size(); ++s)
          if (!moved[s].is_zero())
            out.add_term({k.first, k.second, static_cast<int>(s)}, -(coeff * c0 * c * moved[s]));
    }
  }
  return out;
}

ModElem y_act_oracle(const ModElem& e, int axis) { return y_act_oracle_cyclo(e, axis).to_rational(); }

CycloModElem apply_group_algebra(const GroupAlgebraElem& a, const CycloModElem& e) {
  CycloModElem out(e.params_ptr(), e.label());
  for (const auto& [g, c] : a) {
    CycloModElem moved = w_act(e, g);
    moved.scale(c);
    out += moved;
  }
  return out;
}

GroupAlgebraElem idempotent(int r, int axis, long k) {
  GroupAlgebraElem out;
  for (long l = 0; l < r; ++l)
    out.emplace_back(GroupElement::zeta_axis(r, axis, l), CycloNum::zeta_pow(r, -l * k) * inverse(Rational(r)));
  return out;
}

bool RelationReport::all_pass() const {
  for (const auto& res : results)
    if (!res.pass) return false;
  return true;
}

RelationReport relation_check(const ParamsPtr& params, const Label& label,
                              const std::vector<RelationSample>& samples, const Rational& kappa,
                              int d_sum_lower) {
  const int r = params->r();
  RelationReport report;
  for (const RelationSample& sample : samples) {
    const int i = sample.y_axis, j = sample.x_index;
    const ModElem e = ModElem::monomial(params, label, sample.mono.n, sample.mono.m, sample.mono.t);
    const int xn = j == 1 ? 1 : 0, xm = j == 1 ? 0 : 1;

    CycloModElem lhs = y_act_oracle_cyclo(x_mul(e, xn, xm), i);
    lhs -= x_mul(y_act_oracle_cyclo(e, i), xn, xm, CycloNum(r, Rational(1)));

    GroupAlgebraElem comm;
    const CycloNum c0(r, params->c0());
    if (i != j) {
      // c0 sum_l z^{-l} zeta_i^l s zeta_i^{-l}
      for (long l = 0; l < r; ++l)
        comm.emplace_back(oracle_reflection(r, l, i), c0 * CycloNum::zeta_pow(r, -l));
    } else {
      comm.emplace_back(GroupElement::identity(r), CycloNum(r, kappa));
      for (long l = d_sum_lower; l < r; ++l) {
        const Rational w = params->d(l) - params->d(l - 1);
        if (w.is_zero()) continue;
        for (auto& [g, c] : idempotent(r, i, l)) comm.emplace_back(g, c * (-w));
      }
      for (long l = 0; l < r; ++l) comm.emplace_back(oracle_reflection(r, l, i), -c0);
    }
    const CycloModElem rhs = apply_group_algebra(comm, CycloModElem::from_rational(e));

    RelationResult res;
    res.sample = sample;
    res.pass = lhs == rhs;
    try {
      res.lhs = lhs.to_rational().str();
      res.rhs = rhs.to_rational().str();
    } catch (const std::exception&) {
      res.lhs = res.pass ? "(cyclotomic)" : "(cyclotomic, differs)";
      res.rhs = res.lhs;
    }
    report.results.push_back(std::move(res));
  }
  return report;
}

}  // namespace cherednik
