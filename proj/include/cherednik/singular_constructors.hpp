#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cherednik/coeff_expr.hpp"
#include "cherednik/labels.hpp"
#include "cherednik/standard_module.hpp"

namespace cherednik {

enum class Family { RowA, RowB, RowC, ColA, ColB, ColC, Pair1a, Pair1b, Pair2a, Pair2b, Pair3a, Pair3b };

std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// A clause of the singular-polynomial catalogue together with its degree
/// parameter n and block count k. For RowA/ColA, n is the degree k*r.
struct CaseTag {
  Family family = Family::RowB;
  int n = 0;
  int k = 0;

  /// "RowC,n=8,k=2".
  std::string str() const;
  /// Inverse of str(); throws std::invalid_argument.
  static CaseTag parse(std::string_view text);
  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

/// True iff the clause's hypotheses hold exactly for (params, label).
bool case_applies(const Params& p, const Label& label, const CaseTag& tag);

/// Every applicable clause with 1 <= n <= max_n, ordered by (n, family).
std::vector<CaseTag> applicable_cases(const Params& p, const Label& label, int max_n);

/// Coefficients of the recursive pair system, 1-based in the paper and
/// 0-based here: a[l-1] is a_l, b[l-1] is b_l, s[t-1] is s_t.
struct RecSystem {
  int k = 0;
  std::vector<Rational> s;
  std::vector<Rational> a;
  std::vector<Rational> b;
  /// Index t (1-based) of a vanishing s_t, or 0.
  int vanishing = 0;
  /// Power of s_t multiplied in to clear the vanishing denominator.
  int clearing_power = 0;

  /// Regular: no s_t vanishes, leading coefficient 1.
  /// Residue: s_t = 0 produces a pole; a, b are the leading coefficients of
  /// s_t^power * p with s_t treated as a formal variable, leading coefficient 0.
  /// FreeDirection: s_t = 0 without a pole; a_t becomes a free parameter and
  /// a, b solve the system with a_t = 1 and leading coefficient 0.
  /// Limit: s_t = 0 without a pole where the free direction is inconsistent;
  /// a, b are the values of p at s_t = 0, leading coefficient 1.
  enum class Mode { Regular, Residue, FreeDirection, Limit };
  Mode mode = Mode::Regular;
};

enum class PairVariant { A, B };

/// Solves and cross-checks the recursive system for clause 1.a or 1.b of the
/// pair catalogue (i < j). Throws InconsistentSystem if any relation fails.
RecSystem solve_rec_system(const Params& p, int i, int j, PairVariant variant, int n, int k);

struct SingularResult {
  ModElem elem;
  CaseTag tag;
  /// Named coefficient values, e.g. ("a1", -12/23).
  std::vector<std::pair<std::string, Rational>> ledger;
  /// Power of the degenerate factor multiplied in (0 if none).
  int clearing_power = 0;
};

SingularResult sing_row(const ParamsPtr& p, int i, const CaseTag& tag);
SingularResult sing_col(const ParamsPtr& p, int i, const CaseTag& tag);
SingularResult sing_pair(const ParamsPtr& p, int i, int j, const CaseTag& tag);
/// Dispatches on the label kind.
SingularResult construct_singular(const ParamsPtr& p, const Label& label, const CaseTag& tag);

/// The product C(k,l) prod_{t<l} (c0 - sign*t) / (c0 - sign*(k - t)), which
/// is the coefficient attached to x1^{n-lr} x2^{lr} in the row, column and
/// closed-form pair families (sign = +1 or -1).
CoeffExpr block_coefficient(int k, int l, int sign);

}  // namespace cherednik
