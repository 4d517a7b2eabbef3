#pragma once

#include <string>
#include <vector>

#include "cherednik/qpoly.hpp"
#include "cherednik/rational.hpp"

namespace cherednik {

/// The r-th cyclotomic polynomial, computed as (z^r - 1) divided by every
/// Phi_d for the proper divisors d of r.
QPoly cyclotomic_minimal_poly(int r);

/// Euler's totient, by trial factorization.
int euler_phi(int r);

/// Q(zeta_r) presented as Q[z]/Phi_r. Instances are immutable and shared.
class CycloField {
 public:
  static const CycloField& get(int r);

  int r() const { return r_; }
  int phi() const { return phi_; }
  const QPoly& modulus() const { return modulus_; }
  /// Reduced coordinates of zeta^k for any integer k.
  const std::vector<Rational>& zeta_pow(long k) const;

  std::vector<Rational> reduce(std::vector<Rational> coeffs) const;

 private:
  explicit CycloField(int r);
  int r_;
  int phi_;
  QPoly modulus_;
  std::vector<std::vector<Rational>> powers_;
};

/// Element of Q(zeta_r), stored as coordinates in the basis 1, zeta, ..., zeta^{phi(r)-1}.
class CycloNum {
 public:
  CycloNum(int r, const Rational& q = Rational(0));
  CycloNum(int r, std::vector<Rational> coeffs);

  static CycloNum zeta_pow(int r, long k);

  int r() const { return field_->r(); }
  const CycloField& field() const { return *field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws NotRational when any coordinate beyond the constant one is nonzero.
  Rational to_rational() const;
  /// Complex conjugate, i.e. zeta -> zeta^{-1}.
  CycloNum conj() const;
  CycloNum inv() const;

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator*=(const Rational& q);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator*(CycloNum a, const Rational& q) { return a *= q; }
  friend CycloNum operator*(const Rational& q, CycloNum a) { return a *= q; }
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inv(); }
  friend CycloNum operator-(const CycloNum& a);
  friend bool operator==(const CycloNum& a, const CycloNum& b);

  std::string str() const;

 private:
  void check_same(const CycloNum& o) const;
  const CycloField* field_;
  std::vector<Rational> c_;
};

/// Sum of zeta^{k l} over l = 0..r-1, evaluated in Q(zeta_r) and collapsed.
Rational power_sum(int r, long k);

}  // namespace cherednik
