#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "suptrop/io.hpp"
#include "suptrop/selfcheck/generators.hpp"

using namespace suptrop;
using suptrop::testing::mat;

namespace {
const SuperScalar E = SuperScalar::zero();

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}
}  // namespace

TEST_CASE("scalar text form") {
  CHECK(scalar_from_json(Json("eps")) == E);
  CHECK(scalar_from_json(Json(4)) == SuperScalar(4));
  CHECK(scalar_from_json(Json(-1.5)) == SuperScalar(-1.5));
  CHECK(scalar_from_json(Json::parse("[3,3]")) == SuperScalar::ghost(3));
  CHECK(scalar_from_json(Json::parse(R"(["eps",2])")) == SuperScalar(eps, 2));
  CHECK(scalar_from_json(Json::parse(R"([1,"eps"])")) == SuperScalar(1));

  CHECK(code_of([] { scalar_from_json(Json("inf")); }) == ErrorCode::BadScalar);
  CHECK(code_of([] { scalar_from_json(Json::parse("[1]")); }) == ErrorCode::BadScalar);
  CHECK(code_of([] { scalar_from_json(Json::parse("[1,2,3]")); }) == ErrorCode::BadScalar);
  CHECK(code_of([] { scalar_from_json(Json(true)); }) == ErrorCode::BadScalar);
  CHECK(code_of([] { scalar_from_json(Json::parse("[[1],2]")); }) == ErrorCode::BadScalar);
}

TEST_CASE("scalar formatting mirrors the input syntax") {
  CHECK(format_scalar(E) == "eps");
  CHECK(format_scalar(SuperScalar(4)) == "4");
  CHECK(format_scalar(SuperScalar(-0.25)) == "-0.25");
  CHECK(format_scalar(SuperScalar::ghost(3)) == "[3,3]");
  CHECK(format_scalar(SuperScalar(eps, 2)) == "[eps,2]");
  CHECK(scalar_to_json(SuperScalar::ghost(3)).dump() == "[3,3]");
  CHECK(scalar_to_json(SuperScalar(eps, 2)).dump() == R"(["eps",2])");
  CHECK(scalar_to_json(SuperScalar(7)).dump() == "7");
  CHECK(scalar_to_json(SuperScalar(0.5)).dump() == "0.5");
}

TEST_CASE("parse a one-generator system") {
  const auto input = parse_input_text(R"({"n":2,"generators":[{"n":2,"entries":[["eps",0],["eps","eps"]]}]})");
  REQUIRE(std::holds_alternative<SuperSystem>(input));
  const SuperSystem s = std::get<SuperSystem>(input);
  CHECK(s.size() == 1);
  CHECK(equal(s[0], mat({{E, 0}, {E, E}})));
}

TEST_CASE("parse a bare matrix") {
  const auto input = parse_input_text(R"({"n":2,"entries":[[[3,3],"eps"],["eps",1]]})");
  REQUIRE(std::holds_alternative<SuperMatrix>(input));
  CHECK(std::get<SuperMatrix>(input)(0, 0) == SuperScalar::ghost(3));
  CHECK(as_system(input).size() == 1);
}

TEST_CASE("malformed documents") {
  CHECK(code_of([] { parse_input_text(R"({"n":2,"entries":[[1,2],[3]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_input_text(R"({"n":2,"entries":[[1,2]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_input_text(R"({"n":0,"entries":[]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_input_text(R"({"n":2.5,"entries":[]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_input_text(R"({"n":1,"entries":[[1]],"extra":true})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_input_text(R"({"n":1,"generators":[]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_input_text(R"([1,2])"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_input_text(R"({"n":1,"entries":[["x"]]})"); }) == ErrorCode::BadScalar);
  CHECK(code_of([] {
          parse_input_text(R"({"n":2,"generators":[{"n":1,"entries":[[1]]}]})");
        }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { parse_input_file("/nonexistent/input.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_input_text("{\n  \"n\": 2,\n  \"entries\": [[1, 2], [3 4]]\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 26);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("structural errors name the offending path") {
  try {
    parse_input_text(R"({"n":2,"generators":[{"n":2,"entries":[[1,2],[3]]}]})");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("/generators/0/entries/1") != std::string::npos);
  }
}

TEST_CASE("serialize then parse is the identity") {
  selfcheck::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = selfcheck::random_size(rng, 1, 5);
    const SuperSystem s = selfcheck::random_system(rng, n, selfcheck::random_size(rng, 1, 3), 0.5);
    const std::string text = system_to_json(s).dump();
    const SuperSystem back = std::get<SuperSystem>(parse_input_text(text));
    REQUIRE(back.size() == s.size());
    for (std::size_t t = 0; t < s.size(); ++t) CHECK(equal(back[t], s[t]));
    CHECK(system_to_json(back).dump() == text);
  }
}

TEST_CASE("corpus files round trip") {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(SUPTROP_FIXTURES_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++seen;
    const ParsedInput first = parse_input_file(entry.path().string());
    const Json doc = std::holds_alternative<SuperMatrix>(first) ? matrix_to_json(std::get<SuperMatrix>(first))
                                                                : system_to_json(std::get<SuperSystem>(first));
    const ParsedInput second = parse_input_text(doc.dump());
    const SuperSystem a = as_system(first), b = as_system(second);
    REQUIRE(a.size() == b.size());
    for (std::size_t t = 0; t < a.size(); ++t) CHECK(equal(a[t], b[t]));
    CHECK(first.index() == second.index());
  }
  CHECK(seen >= 5);
}

TEST_CASE("format_matrix") {
  CHECK(format_matrix(mat({{E, 0}, {SuperScalar::ghost(2), SuperScalar(eps, -1)}})) == "eps 0\n[2,2] [eps,-1]\n");
}
