#pragma once

#include <map>
#include <string>
#include <vector>

#include "cherednik/rational.hpp"

namespace cherednik {

/// scalar * prod (c0 - z)^e over a finite set of roots z, with e of either sign.
/// Common factors cancel on construction.
class CoeffExpr {
 public:
  CoeffExpr(const Rational& scalar = Rational(1)) : scalar_(scalar) {}  // NOLINT(google-explicit-constructor)

  /// The linear factor (c0 - z).
  static CoeffExpr linear(const Rational& z);

  const Rational& scalar() const { return scalar_; }
  const std::map<Rational, int>& exponents() const { return exps_; }
  bool is_zero() const { return scalar_.is_zero(); }

  CoeffExpr& operator*=(const CoeffExpr& o);
  CoeffExpr& operator/=(const CoeffExpr& o);
  friend CoeffExpr operator*(CoeffExpr a, const CoeffExpr& b) { return a *= b; }
  friend CoeffExpr operator/(CoeffExpr a, const CoeffExpr& b) { return a /= b; }

  /// Exponent of (c0 - value) in the expression; negative for a pole.
  int order_at(const Rational& value) const;
  /// Value at c0 = value; throws std::domain_error at a pole.
  Rational eval(const Rational& value) const;
  /// Value of (c0 - value)^shift times the expression at c0 = value.
  Rational eval_shifted(const Rational& value, int shift) const;

  std::string str() const;

 private:
  Rational scalar_;
  std::map<Rational, int> exps_;
};

struct ClearedValues {
  std::vector<Rational> values;
  /// Power of (c0 - root) multiplied in; 0 when nothing had to be cleared.
  int power = 0;
  Rational root;
};

/// Evaluates every expression at c0 after multiplying all of them by the
/// smallest power of (c0 - c0_value) that removes every pole.
ClearedValues evaluate_cleared(const std::vector<CoeffExpr>& exprs, const Rational& c0_value);

}  // namespace cherednik
