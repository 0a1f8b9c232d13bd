#include <doctest.h>

#include "galcov/word.hpp"

using namespace galcov;

TEST_SUITE("word") {
  TEST_CASE("free reduction") {
    auto w = parse_word("g1 g2 g2^-1 g1^-1 g3");
    CHECK(to_string(reduce(w)) == "g3");
    CHECK(reduce(w).is_reduced());
    CHECK_FALSE(w.is_reduced());
    CHECK(to_string(reduce(parse_word("g1 g1^-1"))) == "1");
  }

  TEST_CASE("cyclic reduction and conjugation") {
    auto w = parse_word("g2 g1 g3 g2^-1");
    CHECK(to_string(cyclically_reduce(w)) == "g1 g3");
    auto a = parse_word("g1"), b = parse_word("g2p");
    CHECK(to_string(conjugate(a, b)) == "g2p g1 g2p^-1");
    CHECK(to_string(commutator(a, b)) == "g1 g2p g1^-1 g2p^-1");
  }

  TEST_CASE("inverse and power") {
    auto w = parse_word("g1 g2p^-1 g3");
    CHECK(to_string(w.inverse()) == "g3^-1 g2p g1^-1");
    CHECK(reduce(w * w.inverse()).empty());
    CHECK(w.power(2).size() == 6);
    CHECK(to_string(w.power(-1)) == to_string(w.inverse()));
    CHECK(w.power(0).empty());
  }

  TEST_CASE("names round trip") {
    for (auto name : {"g1", "g12p", "s4", "X1.2", "A3.1", "X[2.1.3.4]", "A[1.2.3.4]3", "R[2.1.3.4]g3p"}) {
      CHECK(generator_name(parse_generator_name(name)) == name);
    }
    auto w = parse_word("g1 g1p^-1 s3 X2.1^-1");
    CHECK(parse_word(to_string(w)) == w);
    CHECK_THROWS_AS(parse_generator_name("q7"), Error);
    CHECK_THROWS_AS(parse_word("g1^2"), Error);
  }

  TEST_CASE("substitution and exponent sums") {
    auto w = parse_word("g1 g2 g1^-1");
    Substitution s{{GeneratorId::surface(1, false), parse_word("g3 g3")}};
    try {
      substitute(w, s);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("g2") != std::string::npos);
    }
    s.emplace(GeneratorId::surface(2, false), parse_word("g2"));
    CHECK(to_string(substitute(w, s)) == "g3 g3 g2 g3^-1 g3^-1");
    Substitution xy{{GeneratorId::surface(1, false), parse_word("g5 g6")}};
    CHECK(to_string(substitute(parse_word("g1^-1"), xy)) == "g6^-1 g5^-1");
    CHECK(substitute(parse_word("g1 g1^-1"), xy).empty());
    CHECK(exponent_sum(parse_word("g1 g1 g2^-1")) == 1);
    CHECK(exponent_sum(parse_word("g1 g1 g2^-1"), GeneratorId::surface(1, false)) == 2);
  }

  TEST_CASE("append_reduced cancels at the seam") {
    FreeWord w = parse_word("g1 g2");
    w.append_reduced(parse_word("g2^-1 g3"));
    CHECK(to_string(w) == "g1 g3");
  }
}
