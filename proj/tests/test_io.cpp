#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cherednik/io.hpp"
#include "cherednik/repro.hpp"
#include "test_util.hpp"

using namespace cherednik;

namespace {

ParamsError::Kind load_error(const std::string& text) {
  try {
    params_from_json(json::parse(text));
  } catch (const ParamsError& e) {
    return e.kind;
  }
  FAIL("no error for " << text);
  return ParamsError::Kind::Io;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parameter files") {
  const ParamsPtr p = params_from_json(json::parse(R"({"r":3,"c0":"1","d":["5","0","-5"]})"));
  CHECK(*p == *testutil::section6());
  CHECK(load_error(R"({"r":3,"c0":"1","d":["1","0","0"]})") == ParamsError::Kind::SumNonZero);
  CHECK(load_error(R"({"r":3,"c0":"1","d":["1","-1"]})") == ParamsError::Kind::BadArity);
  CHECK(load_error(R"({"r":3,"c0":"1/0","d":["5","0","-5"]})") == ParamsError::Kind::BadRational);
  CHECK(load_error(R"({"r":3,"c0":"x","d":["5","0","-5"]})") == ParamsError::Kind::BadRational);
  CHECK(load_error(R"({"r":3,"d":["5","0","-5"]})") == ParamsError::Kind::BadFormat);
  CHECK(to_json(*p) == json::parse(R"({"r":3,"c0":"1","d":["5","0","-5"]})"));
}

TEST_CASE("bundled parameter files load") {
  CHECK(load_params(data_dir() / "params" / "example36.json")->r() == 3);
  CHECK(load_params(data_dir() / "params" / "example35.json")->r() == 4);
  try {
    load_params("/nonexistent/params.json");
    FAIL("expected an error");
  } catch (const ParamsError& e) {
    CHECK(e.kind == ParamsError::Kind::Io);
  }
}

TEST_CASE("group element syntax") {
  CHECK(parse_group_element("1,2", 3) == GroupElement::diag(3, 1, 2));
  CHECK(parse_group_element("0,0,s", 3) == GroupElement::transposition(3));
  CHECK_THROWS_AS(parse_group_element("1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_element("1,2,t", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_group_element("a,2", 3), std::invalid_argument);
}

TEST_CASE("module elements round-trip through json") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 6);
    const auto p = testutil::random_params(rng, r);
    const Label l = testutil::random_label(rng, r);
    const ModElem e = testutil::random_elem(rng, p, l, 12, 5);
    const json j = to_json(e);
    CHECK(mod_elem_from_json(p, json::parse(j.dump())) == e);
    CHECK(ModElem::parse(p, l, j.at("input").get<std::string>()) == e);
  }
}

TEST_CASE("reports serialize") {
  const auto p = testutil::section6();
  const json rep = to_json(hom_conditions(Label::row(2), Label::row(0), *p));
  CHECK(rep.at("exists") == true);
  CHECK(rep.at("predicted_degrees") == json::array({20}));
  const json dia = to_json(morphism_diagram(p), false);
  CHECK(dia.at("edges").size() == 21);
}

}
