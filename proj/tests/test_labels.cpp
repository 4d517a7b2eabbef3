#include <doctest.h>

#include "cherednik/errors.hpp"
#include "cherednik/labels.hpp"
#include "test_util.hpp"

using namespace cherednik;

TEST_SUITE("labels") {

TEST_CASE("parameters enforce the zero sum") {
  CHECK_NOTHROW(Params(3, Rational(1), {5, 0, -5}));
  CHECK_THROWS_AS(Params(3, Rational(1), {1, 0, 0}), InvalidParams);
  CHECK_THROWS_AS(Params(3, Rational(1), {1, -1}), InvalidParams);
  CHECK_THROWS_AS(Params(0, Rational(1), {}), InvalidParams);
  const Params p(3, Rational(1), {5, 0, -5});
  CHECK(p.d(-1) == Rational(-5));
  CHECK(p.d(4) == Rational(0));
  CHECK(p.digest() == "r=3;c0=1;d=5,0,-5");
}

TEST_CASE("label enumeration and parsing") {
  for (int r = 1; r <= 6; ++r) {
    const auto labels = enumerate_labels(r);
    CHECK(labels.size() == static_cast<std::size_t>(2 * r + r * (r - 1) / 2));
    int dim_sq = 0;
    for (const auto& l : labels) {
      dim_sq += l.dim() * l.dim();
      CHECK(Label::parse(l.str(), r) == l);
    }
    CHECK(dim_sq == 2 * r * r);
  }
  CHECK(Label::pair(2, 0) == Label::pair(0, 2));
  CHECK_THROWS_AS(Label::pair(1, 1), InvalidLabel);
  CHECK_THROWS_AS(Label::parse("row:3", 3), InvalidLabel);
  CHECK_THROWS_AS(Label::parse("pair:1", 3), InvalidLabel);
  CHECK_THROWS_AS(Label::parse("box:1", 3), InvalidLabel);
}

TEST_CASE("charged contents for the three-label example") {
  const Params p(3, Rational(1), {5, 0, -5});
  auto contents = [&](const Label& l, int slot) {
    const auto t = tableaux(l)[static_cast<std::size_t>(slot)];
    return std::pair{charged_content(t.boxes[0], p), charged_content(t.boxes[1], p)};
  };
  CHECK(contents(Label::row(0), 0) == std::pair{Rational(5), Rational(8)});
  CHECK(contents(Label::row(2), 0) == std::pair{Rational(-5), Rational(-2)});
  CHECK(contents(Label::col(1), 0) == std::pair{Rational(0), Rational(-3)});
  CHECK(contents(Label::pair(0, 2), 0) == std::pair{Rational(5), Rational(-5)});
  CHECK(contents(Label::pair(0, 2), 1) == std::pair{Rational(-5), Rational(5)});
}

TEST_CASE("group elements") {
  for (int r = 1; r <= 5; ++r) {
    const auto g = group_elements(r);
    CHECK(g.size() == static_cast<std::size_t>(2 * r * r));
    for (const auto& a : g) {
      CHECK(a * a.inverse() == GroupElement::identity(r));
      CHECK(a.inverse() * a == GroupElement::identity(r));
    }
  }
  const auto s = GroupElement::transposition(4);
  const auto t = GroupElement::diag(4, 1, 3);
  CHECK(s * t * s == GroupElement::diag(4, 3, 1));
}

TEST_CASE("torus weights and transposition signs") {
  CHECK(slot_weight(Label::row(2), 0) == std::array<int, 2>{2, 2});
  CHECK(slot_weight(Label::pair(0, 2), 0) == std::array<int, 2>{0, 2});
  CHECK(slot_weight(Label::pair(0, 2), 1) == std::array<int, 2>{2, 0});
  const auto s = GroupElement::transposition(3);
  CHECK(act_on_slot(Label::row(1), s, 0).sign == 1);
  CHECK(act_on_slot(Label::col(1), s, 0).sign == -1);
  const SlotImage img = act_on_slot(Label::pair(0, 1), s, 0);
  CHECK(img.slot == 1);
  CHECK(img.sign == 1);
}

TEST_CASE("character values") {
  const CycloNum one(3, Rational(1));
  CHECK(character(Label::row(0), GroupElement::transposition(3)) == one);
  CHECK(character(Label::col(0), GroupElement::transposition(3)) == CycloNum(3, Rational(-1)));
  CHECK(character(Label::pair(0, 1), GroupElement::transposition(3)).is_zero());
  CHECK(character(Label::pair(0, 1), GroupElement::identity(3)) == CycloNum(3, Rational(2)));
  CHECK(character(Label::row(1), GroupElement::diag(3, 1, 0)) == CycloNum::zeta_pow(3, 1));
}

TEST_CASE("character orthogonality") {
  for (int r = 2; r <= 5; ++r) {
    const auto labels = enumerate_labels(r);
    const auto group = group_elements(r);
    for (const auto& a : labels)
      for (const auto& b : labels) {
        CycloNum sum(r);
        for (const auto& g : group) sum += character(a, g) * character(b, g).conj();
        CHECK(sum == CycloNum(r, Rational(a == b ? 2 * r * r : 0)));
      }
  }
}

TEST_CASE("representation matrices multiply") {
  std::mt19937 rng(7);
  for (int r = 2; r <= 4; ++r)
    for (const auto& l : enumerate_labels(r))
      for (const auto& g : group_elements(r))
        for (const auto& h : group_elements(r)) {
          if ((rng() % 5) != 0) continue;
          std::vector<CycloNum> v;
          for (int k = 0; k < l.dim(); ++k) v.emplace_back(r, testutil::random_rational(rng, 5, 3));
          CHECK(w_act_on_rep(l, g * h, v) == w_act_on_rep(l, g, w_act_on_rep(l, h, v)));
        }
}

}
