#include <fstream>
#include <sstream>
#include <string>

#include "braidkit/serial.hpp"
#include "doctest.h"

using namespace braidkit;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture(const std::string& name) {
  return std::string(BRAIDKIT_FIXTURES) + "/" + name;
}

// a copy with one textual patch applied, for error-path probing
std::string patched(std::string text, const std::string& from,
                    const std::string& to) {
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, from.size(), to);
  return text;
}

}  // namespace

TEST_CASE("fixture files round-trip byte-identically") {
  for (const char* name : {"kz2", "kz4", "sweedler4", "monoid2"}) {
    std::string text = slurp(fixture(std::string(name) + ".json"));
    ParsedAlgebra a = parse_algebra_text(text, name);
    CHECK(serialize(a) == text);
  }
}

TEST_CASE("fixture files reproduce the built-in constructors") {
  ParsedAlgebra kz2 = parse_algebra(fixture("kz2.json"));
  Bialgebra h = group_algebra(2);
  CHECK(kz2.space == h.space);
  CHECK(*kz2.mul == h.mul);
  CHECK(*kz2.unit == h.unit);
  CHECK(*kz2.comul == h.comul);
  CHECK(*kz2.counit == h.counit);
  REQUIRE(kz2.antipode.has_value());
  CHECK(*kz2.antipode == *h.antipode);
  CHECK(check_bialgebra(kz2.bialgebra()).empty());

  ParsedAlgebra s4 = parse_algebra(fixture("sweedler4.json"));
  Bialgebra h4 = sweedler_h4();
  CHECK(*s4.mul == h4.mul);
  CHECK(*s4.comul == h4.comul);
  CHECK(*s4.antipode == *h4.antipode);
  CHECK(s4.space.basis_names == std::vector<std::string>{"1", "g", "x", "gx"});

  ParsedAlgebra kz4 = parse_algebra(fixture("kz4.json"));
  CHECK(*kz4.mul == group_algebra(4).mul);

  ParsedAlgebra mon = parse_algebra(fixture("monoid2.json"));
  CHECK(!mon.antipode.has_value());
  CHECK(*mon.mul == idempotent_monoid_bialgebra().mul);
  CHECK(check_bialgebra(mon.bialgebra()).empty());
}

TEST_CASE("serialize of the constructors is canonical") {
  ParsedAlgebra a = to_file(sweedler_h4());
  std::string once = serialize(a);
  CHECK(serialize(parse_algebra_text(once, "mem")) == once);
  CHECK(once.back() == '\n');
}

TEST_CASE("field override and fallback") {
  std::string text = slurp(fixture("sweedler4.json"));

  SUBCASE("force reinterprets the printed constants") {
    ParsedAlgebra a = parse_algebra_text(text, "mem", field_fp(2));
    CHECK(a.field.str() == "F2");
    // -1 collapses onto 1 in characteristic 2
    CHECK(a.mul->at(3, 2 * 4 + 1) == scalar_one(field_fp(2)));
    CHECK(check_bialgebra(a.bialgebra()).empty());
  }

  SUBCASE("an explicit field key beats the fallback") {
    ParsedAlgebra a = parse_algebra_text(text, "mem", {}, field_fp(5));
    CHECK(a.field.str() == "Q");
  }

  SUBCASE("the fallback fills in a missing field key") {
    std::string nofield = patched(text, "  \"field\": \"Q\",\n", "");
    CHECK(parse_algebra_text(nofield, "mem").field.str() == "Q");
    CHECK(parse_algebra_text(nofield, "mem", {}, field_fp(5)).field.str() ==
          "F5");
  }
}

TEST_CASE("parse rejects malformed files with the offending field named") {
  std::string text = slurp(fixture("kz2.json"));
  auto reject = [&](const std::string& bad, const std::string& needle) {
    try {
      parse_algebra_text(bad, "mem");
      FAIL_CHECK("expected ParseError mentioning " << needle);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  reject("[1, 2]", "object");
  reject("{ not json", "mem:");
  reject(patched(text, "\"name\": \"k[Z/2]\"", "\"nom\": \"k\""), "unknown key");
  reject(patched(text, "\"field\": \"Q\"", "\"field\": \"F6\""), "field");
  reject(patched(text, "\"field\": \"Q\"", "\"field\": \"R\""), "field");
  reject(patched(text, "\"dim\": 2", "\"dim\": 3"), "basis");
  reject(patched(text, "[\"g0\", \"g1\"]", "[\"g0\", \"g0\"]"), "distinct");
  reject(patched(text, "[1, 1, 0, \"1\"]", "[1, 2, 0, \"1\"]"),
         "index out of range");
  reject(patched(text, "[1, 1, 0, \"1\"]", "[1, 1, 0, \"1/0\"]"), "mul[3]");
  reject(patched(text, "[1, 1, 0, \"1\"]", "[1, 1, 0, 1]"),
         "coefficient must be a string");
  reject(patched(text, "[1, 1, 0, \"1\"]", "[1, 0, 1, \"1\"]"),
         "duplicate triple (1, 0, 1)");
  reject(patched(text, "  \"unit\": [\"1\", \"0\"],\n", ""),
         "\"mul\" and \"unit\"");
  reject(patched(text, "\"unit\": [\"1\", \"0\"]", "\"unit\": [\"1\"]"),
         "unit");
}

TEST_CASE("an antipode without a coalgebra half is rejected") {
  ParsedAlgebra a = to_file(group_algebra(2).algebra());
  std::string text = serialize(a);
  std::string with = patched(text, "  ]\n}",
                             "  ],\n  \"antipode\": [[\"1\", \"0\"], "
                             "[\"0\", \"1\"]]\n}");
  CHECK_THROWS_AS(parse_algebra_text(with, "mem"), ParseError);
  // and the algebra-only file itself is fine but refuses bialgebra()
  ParsedAlgebra b = parse_algebra_text(text, "mem");
  CHECK(b.has_algebra());
  CHECK(!b.has_coalgebra());
  CHECK_THROWS_AS(b.bialgebra(), ParseError);
  CHECK(check_uaa(b.algebra()).empty());
}

TEST_CASE("axiom failures surface from the constructors, not the parser") {
  std::string text = slurp(fixture("kz2.json"));
  // g0 * g1 = 2 g1 breaks unitality
  std::string bad = patched(text, "[0, 1, 1, \"1\"]", "[0, 1, 1, \"2\"]");
  ParsedAlgebra a = parse_algebra_text(bad, "mem");
  CHECK_THROWS_AS(a.bialgebra(), std::invalid_argument);
  Bialgebra h = a.bialgebra(/*unchecked=*/true);
  CHECK(!check_bialgebra(h).empty());
}

TEST_CASE("the product block is carried verbatim") {
  ParsedAlgebra a = to_file(group_algebra(2));
  a.product = "{\"kind\":\"test\",\"theta\":[2,1]}";
  std::string text = serialize(a);
  ParsedAlgebra b = parse_algebra_text(text, "mem");
  CHECK(b.product == a.product);
  CHECK(serialize(b) == text);
}

TEST_CASE("zero coefficients are dropped, not stored") {
  std::string text = slurp(fixture("kz2.json"));
  std::string with = patched(text, "[1, 1, 0, \"1\"]",
                             "[1, 1, 0, \"1\"],\n    [1, 1, 1, \"0\"]");
  ParsedAlgebra a = parse_algebra_text(with, "mem");
  CHECK(*a.mul == group_algebra(2).mul);
  CHECK(serialize(a) == text);
}
