#include "cherednik/linalg.hpp"

#include <stdexcept>

namespace cherednik {

Fp field_inverse(Fp a) {
  if (a.is_zero()) throw std::domain_error("Fp: inverse of zero");
  Fp out(1), base = a;
  for (std::uint64_t e = Fp::P - 2; e; e >>= 1) {
    if (e & 1) out *= base;
    base *= base;
  }
  return out;
}

std::optional<Fp> to_fp(const Rational& q) {
  const mpz_class p(static_cast<unsigned long>(Fp::P));
  mpz_class num = q.numerator() % p;
  mpz_class den = q.denominator() % p;
  if (den == 0) return std::nullopt;
  if (num < 0) num += p;
  Fp n, d;
  n.v = num.get_ui();
  d.v = den.get_ui();
  return n * field_inverse(d);
}

}  // namespace cherednik
