#include <doctest.h>

#include "galcov/coset_enumeration.hpp"
#include "galcov/kernel.hpp"
#include "galcov/model_group.hpp"

using namespace galcov;

namespace {

GroupPresentation make(std::vector<std::string> gens, std::vector<std::string> rels) {
  GroupPresentation p;
  for (const auto& g : gens) p.generators.push_back(parse_generator_name(g));
  for (const auto& r : rels) p.relators.push_back(parse_word(r));
  return p;
}

}  // namespace

TEST_SUITE("coset_enumeration") {
  TEST_CASE("cyclic group of order 3") {
    for (auto s : {Strategy::HLT, Strategy::Felsch}) {
      EnumerationOptions o;
      o.strategy = s;
      auto t = todd_coxeter(make({"g1"}, {"g1 g1 g1"}), {}, o);
      CHECK(t.complete());
      CHECK(t.index == 3);
    }
  }

  TEST_CASE("S3") {
    auto p = make({"g1", "g2"}, {"g1 g1", "g2 g2", "g1 g2 g1 g2 g1 g2"});
    for (auto s : {Strategy::HLT, Strategy::Felsch}) {
      for (bool inv : {true, false}) {
        EnumerationOptions o;
        o.strategy = s;
        o.involution_columns = inv;
        auto t = todd_coxeter(p, {}, o);
        CHECK(t.index == 6);
        CHECK(t.verify(p));
        CHECK(todd_coxeter(p, {parse_word("g1")}, o).index == 3);
      }
    }
  }

  TEST_CASE("larger known groups") {
    // (2,3,7) triangle quotient PSL(2,7) of order 168
    auto p = make({"g1", "g2"}, {"g1 g1", "g2 g2 g2", "g1 g2 g1 g2 g1 g2 g1 g2 g1 g2 g1 g2 g1 g2",
                                 "g1 g2 g1 g2^-1 g1 g2 g1 g2^-1 g1 g2 g1 g2^-1 g1 g2 g1 g2^-1"});
    for (auto s : {Strategy::HLT, Strategy::Felsch}) {
      EnumerationOptions o;
      o.strategy = s;
      auto t = todd_coxeter(p, {}, o);
      CHECK(t.index == 168);
      CHECK(t.verify(p));
    }
    // Coxeter group B3 of order 48
    auto b3 = make({"g1", "g2", "g3"}, {"g1 g1", "g2 g2", "g3 g3", "g1 g2 g1 g2 g1 g2 g1 g2", "g2 g3 g2 g3 g2 g3",
                                        "g1 g3 g1 g3"});
    CHECK(todd_coxeter(b3, {}).index == 48);
  }

  TEST_CASE("budget exhaustion is flagged") {
    auto p = make({"g1", "g2"}, {"g1 g1", "g2 g2", "g1 g2 g1 g2 g1 g2"});
    EnumerationOptions o;
    o.max_cosets = 3;
    auto t = todd_coxeter(p, {}, o);
    CHECK_FALSE(t.complete());
    CHECK(t.status == CosetTable::Status::BudgetExceeded);
    CHECK_THROWS_AS(t.trace(1, parse_word("g1")), Error);
    auto free = make({"g1"}, {});
    CHECK_FALSE(todd_coxeter(free, {}, o).complete());
  }

  TEST_CASE("strategies agree on the finite quotients") {
    for (int m : {2, 3}) {
      auto fq = finite_quotient_presentation(pitilde_presentation(2, 0, true), m, 2);
      std::uint64_t expect = ModelGroup(2, m).order();
      for (auto s : {Strategy::HLT, Strategy::Felsch}) {
        for (bool rev : {false, true}) {
          EnumerationOptions o;
          o.strategy = s;
          o.reverse_relators = rev;
          auto t = todd_coxeter(fq, {}, o);
          CHECK(t.complete());
          CHECK(t.index == expect);
        }
      }
      auto t = todd_coxeter(fq, {});
      CHECK(t.verify(fq));
    }
  }

  TEST_CASE("subgroup index of the kernel") {
    // psi has image S_4, so the kernel has index 24.
    auto fq = finite_quotient_presentation(pitilde_presentation(2, 0, true), 2, 2);
    std::vector<FreeWord> gens;
    for (const auto& g : pair_generators(2)) gens.push_back(expand_to_surface(FreeWord::of(g), 2));
    CHECK(todd_coxeter(fq, gens).index == 24);
  }
}
