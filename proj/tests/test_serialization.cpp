#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "rankgeo/constructions.hpp"
#include "rankgeo/serialization.hpp"

using namespace rankgeo;

TEST_CASE("code JSON round trip") {
  auto code = hadamard_h1(2, 2, 2);
  const std::string text = code_to_json(code);
  auto back = code_from_json(text);
  CHECK(back == code);
  // byte-identical re-serialization
  CHECK(code_to_json(back) == text);
}

TEST_CASE("golden code file for the (2,2,2) constant-weight family") {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/h1_2_2_2.json", std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(code_to_json(hadamard_h1(2, 2, 2)) == buf.str());
  CHECK(code_from_json(buf.str()) == hadamard_h1(2, 2, 2));
}

TEST_CASE("non-canonical generators canonicalize on read") {
  auto t = make_tower(2, 1, 2);
  // same row space as the canonical [[1,g]], written with a scaled generator
  const std::string text = R"({
    "p": 2, "e": 1, "m": 2, "modulus": [1, 1, 1],
    "n": 2, "k": 1,
    "generator": [[1, 2]]
  })";
  auto code = code_from_json(text);
  CHECK(code.generator().at(0, 0) == t->one());
  CHECK(code.generator().at(0, 1) == t->gen());
}

TEST_CASE("malformed code files raise ParseError") {
  CHECK_THROWS_AS(code_from_json("not json at all"), ParseError);
  CHECK_THROWS_AS(code_from_json(R"({"p":2,"e":1,"m":2})"), ParseError);
  // wrong modulus for (2, 2)
  CHECK_THROWS_AS(code_from_json(R"({"p":2,"e":1,"m":2,"modulus":[1,0,1],
    "n":1,"k":1,"generator":[[0]]})"),
                  ParseError);
  // exponent out of range
  CHECK_THROWS_AS(code_from_json(R"({"p":2,"e":1,"m":2,"modulus":[1,1,1],
    "n":1,"k":1,"generator":[[7]]})"),
                  ParseError);
  // ragged generator
  CHECK_THROWS_AS(code_from_json(R"({"p":2,"e":1,"m":2,"modulus":[1,1,1],
    "n":2,"k":1,"generator":[[0]]})"),
                  ParseError);
  // rank-deficient generator is a domain error, not a parse error
  CHECK_THROWS_AS(code_from_json(R"({"p":2,"e":1,"m":2,"modulus":[1,1,1],
    "n":2,"k":2,"generator":[[0,1],[0,1]]})"),
                  RankDeficientGenerator);
}

TEST_CASE("matrix text format") {
  auto t = make_tower(3, 1, 2);
  Matrix m(t, 2, 3);
  m.set(0, 0, t->one());
  m.set(0, 2, t->gen());
  m.set(1, 1, t->pow(t->gen(), 5));
  const std::string text = matrix_to_text(m);
  auto back = matrix_from_text(text);
  CHECK(back == m);
  CHECK(matrix_to_text(back) == text);

  SUBCASE("zero-row matrices survive") {
    Matrix empty(t, 0, 4);
    CHECK(matrix_from_text(matrix_to_text(empty)) == empty);
  }
  SUBCASE("truncated bodies are rejected") {
    CHECK_THROWS_AS(matrix_from_text("3 1 2 2 2\n2 1 1\n0 1\n0"), ParseError);
    CHECK_THROWS_AS(matrix_from_text(""), ParseError);
  }
}

TEST_CASE("file round trip") {
  auto code = gabidulin(2, 3, 3, 2);
  const std::string path = "serialization_roundtrip.json";
  write_code_file(path, code);
  CHECK(read_code_file(path) == code);
  std::remove(path.c_str());
}
