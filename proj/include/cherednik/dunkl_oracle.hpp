#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/cyclotomic.hpp"
#include "cherednik/labels.hpp"
#include "cherednik/standard_module.hpp"

namespace cherednik {

/// Bivariate polynomial over Q(zeta_r), keyed by (exponent of x1, exponent of x2).
using CycloPoly = std::map<std::pair<int, int>, CycloNum>;

/// The reflection used by the raw commutation formula for y_axis:
/// [[0, z^l], [z^-l, 0]] for axis 1 and [[0, z^-l], [z^l, 0]] for axis 2.
GroupElement oracle_reflection(int r, long l, int axis);

/// Image of f under oracle_reflection(r, l, axis) acting on the variables.
CycloPoly reflect(const CycloPoly& f, int r, long l, int axis);

/// (f - s f) / (x1 - z^l x2) for axis 1, (f - s f) / (x2 - z^l x1) for axis 2.
/// Throws std::logic_error if the division leaves a remainder.
CycloPoly divided_diff(const CycloPoly& f, int r, long l, int axis);

/// The y-action evaluated term by term from the raw commutation formula
/// over Q(zeta_r), then collapsed to rationals.
CycloModElem y_act_oracle_cyclo(const ModElem& e, int axis);
ModElem y_act_oracle(const ModElem& e, int axis);

/// Formal element of the group algebra.
using GroupAlgebraElem = std::vector<std::pair<GroupElement, CycloNum>>;

CycloModElem apply_group_algebra(const GroupAlgebraElem& a, const CycloModElem& e);

/// (1/r) sum_l zeta^{-l k} zeta_axis^l.
GroupAlgebraElem idempotent(int r, int axis, long k);

struct RelationSample {
  Mono mono;
  int y_axis = 1;
  int x_index = 1;
};

struct RelationResult {
  RelationSample sample;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct RelationReport {
  std::vector<RelationResult> results;
  bool all_pass() const;
};

/// Compares y_i (x_j e) - x_j (y_i e), computed with the oracle, against the
/// group-algebra commutator applied to e. `kappa` is the constant term and
/// `d_sum_lower` the first index of the sum over (d_l - d_{l-1}) e_{il}.
RelationReport relation_check(const ParamsPtr& params, const Label& label,
                              const std::vector<RelationSample>& samples, const Rational& kappa = Rational(1),
                              int d_sum_lower = 0);

}  // namespace cherednik
