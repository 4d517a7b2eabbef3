#include "cherednik/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace cherednik {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::linear(const Rational& root) { return QPoly({-root, Rational(1)}); }

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

long QPoly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<long>(k);
  return -1;
}

Rational QPoly::eval(const Rational& z) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  const Rational lead = leading();
  std::vector<Rational> v(c_);
  for (auto& x : v) x /= lead;
  return QPoly(std::move(v));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

QPoly operator-(const QPoly& a) {
  std::vector<Rational> v(a.c_);
  for (auto& x : v) x = -x;
  return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(v));
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const bool unit = mag == Rational(1);
    if (!unit || k == 0) os << mag;
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
  std::vector<Rational> rem(a.coeffs());
  const long db = b.degree();
  std::vector<Rational> quo(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
  for (long k = a.degree(); k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    const Rational f = top / b.leading();
    quo[static_cast<std::size_t>(k - db)] = f;
    for (long t = 0; t <= db; ++t)
      rem[static_cast<std::size_t>(k - db + t)] -= f * b.coeffs()[static_cast<std::size_t>(t)];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  QPoly r0 = m, r1 = divmod(a, m).second;
  QPoly t0, t1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw std::domain_error("QPoly: not invertible modulo m");
  const Rational scale = inverse(r0.leading());
  return divmod(t0 * QPoly(scale), m).second;
}

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

RatFunc RatFunc::variable() { return RatFunc(QPoly::monomial(Rational(1), 1), QPoly(Rational(1))); }

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(Rational(1));
    return;
  }
  const QPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (lead != Rational(1)) {
    num_ = num_ * QPoly(inverse(lead));
    den_ = den_ * QPoly(inverse(lead));
  }
}

long RatFunc::order_at_zero() const {
  if (num_.is_zero()) return 0;
  return num_.valuation() - den_.valuation();
}

Rational RatFunc::laurent_coeff(long k) const {
  if (num_.is_zero()) return Rational(0);
  const long ord = order_at_zero();
  if (k < ord) return Rational(0);
  if (k > ord) throw std::logic_error("RatFunc::laurent_coeff: only the leading term is supported");
  return num_.coeff(static_cast<std::size_t>(num_.valuation())) /
         den_.coeff(static_cast<std::size_t>(den_.valuation()));
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

}  // namespace cherednik
