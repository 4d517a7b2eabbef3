#include "cherednik/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "cherednik/errors.hpp"

namespace cherednik {

int euler_phi(int r) {
  if (r < 1) throw std::invalid_argument("euler_phi: r must be positive");
  int n = r, out = r;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    out -= out / p;
  }
  if (n > 1) out -= out / n;
  return out;
}

QPoly cyclotomic_minimal_poly(int r) {
  if (r < 1) throw std::invalid_argument("cyclotomic_minimal_poly: r must be positive");
  QPoly p = QPoly::monomial(Rational(1), static_cast<std::size_t>(r)) - QPoly(Rational(1));
  for (int d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    auto [q, rem] = divmod(p, cyclotomic_minimal_poly(d));
    if (!rem.is_zero()) throw std::logic_error("cyclotomic_minimal_poly: inexact division");
    p = std::move(q);
  }
  return p;
}

const CycloField& CycloField::get(int r) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const CycloField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto it = fields.find(r);
  if (it == fields.end())
    it = fields.emplace(r, std::unique_ptr<const CycloField>(new CycloField(r))).first;
  return *it->second;
}

CycloField::CycloField(int r) : r_(r), phi_(euler_phi(r)), modulus_(cyclotomic_minimal_poly(r)) {
  if (modulus_.degree() != phi_) throw std::logic_error("CycloField: degree mismatch");
  powers_.reserve(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v[static_cast<std::size_t>(k)] = Rational(1);
    powers_.push_back(reduce(std::move(v)));
  }
}

const std::vector<Rational>& CycloField::zeta_pow(long k) const {
  long m = k % r_;
  if (m < 0) m += r_;
  return powers_[static_cast<std::size_t>(m)];
}

std::vector<Rational> CycloField::reduce(std::vector<Rational> coeffs) const {
  // Phi_r is monic, so z^phi = -(lower terms).
  const auto& mod = modulus_.coeffs();
  for (std::size_t k = coeffs.size(); k-- > static_cast<std::size_t>(phi_);) {
    if (coeffs[k].is_zero()) continue;
    const Rational top = coeffs[k];
    const std::size_t base = k - static_cast<std::size_t>(phi_);
    for (std::size_t t = 0; t < static_cast<std::size_t>(phi_); ++t)
      if (!mod[t].is_zero()) coeffs[base + t] -= top * mod[t];
    coeffs[k] = Rational(0);
  }
  coeffs.resize(static_cast<std::size_t>(phi_));
  return coeffs;
}

CycloNum::CycloNum(int r, const Rational& q)
    : field_(&CycloField::get(r)), c_(static_cast<std::size_t>(field_->phi())) {
  c_[0] = q;
}

CycloNum::CycloNum(int r, std::vector<Rational> coeffs)
    : field_(&CycloField::get(r)), c_(field_->reduce(std::move(coeffs))) {}

CycloNum CycloNum::zeta_pow(int r, long k) {
  const CycloField& f = CycloField::get(r);
  return CycloNum(r, f.zeta_pow(k));
}

bool CycloNum::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

Rational CycloNum::to_rational() const {
  if (!is_rational()) throw NotRational("cyclotomic value " + str() + " is not rational");
  return c_[0];
}

CycloNum CycloNum::conj() const {
  CycloNum out(r());
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    const auto& z = field_->zeta_pow(-static_cast<long>(k));
    for (std::size_t t = 0; t < z.size(); ++t)
      if (!z[t].is_zero()) out.c_[t] += c_[k] * z[t];
  }
  return out;
}

CycloNum CycloNum::inv() const {
  if (is_zero()) throw std::domain_error("CycloNum: inverse of zero");
  const QPoly inv = inverse_mod(QPoly(c_), field_->modulus());
  return CycloNum(r(), inv.coeffs());
}

void CycloNum::check_same(const CycloNum& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("CycloNum: mixing r=" + std::to_string(r()) + " and r=" +
                        std::to_string(o.r()));
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  check_same(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  check_same(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  check_same(o);
  std::vector<Rational> prod(2 * c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) prod[i + j] += c_[i] * o.c_[j];
  }
  c_ = field_->reduce(std::move(prod));
  return *this;
}

CycloNum& CycloNum::operator*=(const Rational& q) {
  for (auto& x : c_) x *= q;
  return *this;
}

CycloNum operator-(const CycloNum& a) {
  CycloNum out(a);
  for (auto& x : out.c_) x = -x;
  return out;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

std::string CycloNum::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < c_.size(); ++k) os << (k ? ", " : "") << c_[k];
  os << "]_" << r();
  return os.str();
}

Rational power_sum(int r, long k) {
  CycloNum acc(r);
  for (long l = 0; l < r; ++l) acc += CycloNum::zeta_pow(r, k * l);
  return acc.to_rational();
}

}  // namespace cherednik
