#include <doctest.h>

#include "cherednik/coeff_expr.hpp"
#include "cherednik/cyclotomic.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/qpoly.hpp"
#include "cherednik/rational.hpp"

using namespace cherednik;

TEST_SUITE("arithmetic") {

TEST_CASE("rational parsing and normal form") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("0/5").is_zero());
  CHECK(Rational(-12, 23).str() == "-12/23");
  CHECK(Rational(4, -2).str() == "-2");
  CHECK_THROWS_AS(Rational::parse("1/0"), BadRational);
  CHECK_THROWS_AS(Rational::parse("abc"), BadRational);
  CHECK_THROWS_AS(Rational::parse(""), BadRational);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(binomial(13, 4) == Rational(715));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 3) > Rational(2));
  // Denominators far beyond 64 bits.
  Rational big(1);
  for (int k = 1; k <= 40; ++k) big *= Rational(k, k + 1000);
  CHECK(big * inverse(big) == Rational(1));
}

TEST_CASE("polynomials over Q") {
  const QPoly x = QPoly::monomial(1, 1);
  const QPoly p = (x - QPoly(Rational(1))) * (x + QPoly(Rational(2)));
  CHECK(p.degree() == 2);
  CHECK(p.eval(1).is_zero());
  const auto [q, rem] = divmod(p, x - QPoly(Rational(1)));
  CHECK(rem.is_zero());
  CHECK(q == x + QPoly(Rational(2)));
  CHECK(gcd(p, (x - QPoly(Rational(1))) * (x - QPoly(Rational(5)))) == x - QPoly(Rational(1)));
}

TEST_CASE("laurent coefficients of rational functions") {
  const RatFunc eps = RatFunc::variable();
  const RatFunc f = (RatFunc(Rational(3)) + eps) / (eps * eps);
  CHECK(f.order_at_zero() == -2);
  CHECK(f.laurent_coeff(-2) == Rational(3));
  CHECK(((RatFunc(Rational(2)) + eps) * eps).order_at_zero() == 1);
}

TEST_CASE("cyclotomic minimal polynomials") {
  CHECK(cyclotomic_minimal_poly(1).degree() == 1);
  CHECK(cyclotomic_minimal_poly(6).str() == "z^2 - z + 1");
  CHECK(cyclotomic_minimal_poly(5).str() == "z^4 + z^3 + z^2 + z + 1");
  for (int r = 1; r <= 12; ++r) CHECK(cyclotomic_minimal_poly(r).degree() == euler_phi(r));
}

TEST_CASE("cyclotomic numbers") {
  for (int r = 1; r <= 8; ++r) {
    const CycloNum z = CycloNum::zeta_pow(r, 1);
    CycloNum acc(r, Rational(1));
    CycloNum sum(r);
    for (int k = 0; k < r; ++k) {
      sum += acc;
      acc *= z;
    }
    CHECK(acc == CycloNum(r, Rational(1)));
    CHECK(sum.is_zero() == (r > 1));
    CHECK(z * z.conj() == CycloNum(r, Rational(1)));
    CHECK(z * z.inv() == CycloNum(r, Rational(1)));
  }
  CHECK((CycloNum::zeta_pow(5, 2) * CycloNum::zeta_pow(5, 4)) == CycloNum::zeta_pow(5, 1));
  CHECK(power_sum(4, 0) == Rational(4));
  CHECK(power_sum(4, 3).is_zero());
  CHECK_THROWS_AS(CycloNum::zeta_pow(3, 1).to_rational(), NotRational);
  CHECK_THROWS(CycloNum(3) + CycloNum(4));
}

TEST_CASE("kernel over Q and modulo p") {
  Matrix<Rational> a = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const auto ker = kernel_basis(a, 3, Rational(0), Rational(1));
  REQUIRE(ker.size() == 1);
  for (const auto& row : a) {
    Rational dot(0);
    for (std::size_t k = 0; k < 3; ++k) dot += row[k] * ker[0][k];
    CHECK(dot.is_zero());
  }
  CHECK(matrix_rank(a, 3) == 2);
  Matrix<Fp> b = {{Fp(1), Fp(2)}, {Fp(3), Fp(6)}};
  CHECK(matrix_rank(b, 2) == 1);
  CHECK(to_fp(Rational(1, 2)).has_value());
  CHECK((*to_fp(Rational(1, 2)) * Fp(2)) == Fp(1));
}

TEST_CASE("products of linear factors in c0") {
  const CoeffExpr e = CoeffExpr::linear(Rational(0)) / CoeffExpr::linear(Rational(3));
  CHECK(e.eval(Rational(1)) == Rational(-1, 2));
  CHECK(e.order_at(Rational(3)) == -1);
  CHECK(e.order_at(Rational(0)) == 1);
  const ClearedValues cv = evaluate_cleared({e, CoeffExpr(Rational(1))}, Rational(3));
  CHECK(cv.power == 1);
  CHECK(cv.values[0] == Rational(3));
  CHECK(cv.values[1].is_zero());
}

}
