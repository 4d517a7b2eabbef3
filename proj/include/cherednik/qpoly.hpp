#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cherednik/rational.hpp"

namespace cherednik {

/// Dense univariate polynomial over Q, coefficients stored from degree 0 up.
/// The zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static QPoly monomial(const Rational& c, std::size_t degree);
  /// The linear form z - root.
  static QPoly linear(const Rational& root);

  bool is_zero() const { return c_.empty(); }
  /// Degree of the polynomial; -1 for zero.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  /// Lowest power of z with a nonzero coefficient; -1 for zero.
  long valuation() const;

  Rational eval(const Rational& z) const;
  QPoly monic() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(const QPoly& a);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic greatest common divisor (zero if both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
QPoly inverse_mod(const QPoly& a, const QPoly& m);

/// Rational function num/den over Q in one variable, kept with coprime parts
/// and a monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(QPoly num, QPoly den);

  /// The indeterminate itself.
  static RatFunc variable();

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Order of vanishing at 0 (negative for a pole).
  long order_at_zero() const;
  /// Coefficient of z^k in the Laurent expansion at 0, for k <= order_at_zero()
  /// this is the leading coefficient (or zero when k is below it).
  Rational laurent_coeff(long k) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

}  // namespace cherednik
