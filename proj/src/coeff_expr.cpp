#include "cherednik/coeff_expr.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cherednik {

CoeffExpr CoeffExpr::linear(const Rational& z) {
  CoeffExpr e;
  e.exps_[z] = 1;
  return e;
}

CoeffExpr& CoeffExpr::operator*=(const CoeffExpr& o) {
  scalar_ *= o.scalar_;
  if (scalar_.is_zero()) {
    exps_.clear();
    return *this;
  }
  for (const auto& [z, e] : o.exps_) {
    const int v = (exps_[z] += e);
    if (v == 0) exps_.erase(z);
  }
  return *this;
}

CoeffExpr& CoeffExpr::operator/=(const CoeffExpr& o) {
  if (o.scalar_.is_zero()) throw std::domain_error("CoeffExpr: division by zero");
  scalar_ /= o.scalar_;
  for (const auto& [z, e] : o.exps_) {
    const int v = (exps_[z] -= e);
    if (v == 0) exps_.erase(z);
  }
  return *this;
}

int CoeffExpr::order_at(const Rational& value) const {
  auto it = exps_.find(value);
  return it == exps_.end() ? 0 : it->second;
}

Rational CoeffExpr::eval_shifted(const Rational& value, int shift) const {
  if (scalar_.is_zero()) return Rational(0);
  const int ord = order_at(value) + shift;
  if (ord < 0) throw std::domain_error("CoeffExpr: pole at c0 = " + value.str());
  if (ord > 0) return Rational(0);
  Rational out = scalar_;
  for (const auto& [z, e] : exps_) {
    if (z == value) continue;
    const Rational f = value - z;
    out *= e > 0 ? pow(f, static_cast<unsigned>(e)) : inverse(pow(f, static_cast<unsigned>(-e)));
  }
  return out;
}

Rational CoeffExpr::eval(const Rational& value) const { return eval_shifted(value, 0); }

std::string CoeffExpr::str() const {
  std::ostringstream num, den;
  for (const auto& [z, e] : exps_) {
    std::ostringstream f;
    f << "(c0" << (z.sign() < 0 ? " + " : " - ") << (z.sign() < 0 ? -z : z) << ")";
    if (std::abs(e) > 1) f << "^" << std::abs(e);
    (e > 0 ? num : den) << f.str();
  }
  std::ostringstream os;
  os << scalar_;
  if (!num.str().empty()) os << "*" << num.str();
  if (!den.str().empty()) os << "/" << den.str();
  return os.str();
}

ClearedValues evaluate_cleared(const std::vector<CoeffExpr>& exprs, const Rational& c0_value) {
  ClearedValues out;
  out.root = c0_value;
  int lowest = 0;
  for (const auto& e : exprs)
    if (!e.is_zero()) lowest = std::min(lowest, e.order_at(c0_value));
  out.power = -lowest;
  for (const auto& e : exprs) out.values.push_back(e.eval_shifted(c0_value, out.power));
  return out;
}

}  // namespace cherednik
