#include <doctest.h>

#include "galcov/kernel.hpp"
#include "galcov/model_group.hpp"

using namespace galcov;

namespace {

bool trivial_in(const ModelGroup& g, const FreeWord& w, int n) {
  return g.is_identity(evaluate(expand_to_surface(w, n), g.images(), g.target()));
}

}  // namespace

TEST_SUITE("model_group") {
  TEST_CASE("orders") {
    CHECK(ModelGroup(2, 2).order() == 1536);
    CHECK(ModelGroup(2, 3).order() == 17496);
    CHECK(ModelGroup(3, 2).order() == 737280);
    CHECK_THROWS_AS(ModelGroup(1, 2), Error);
    CHECK_THROWS_AS(ModelGroup(2, 1), Error);
  }

  TEST_CASE("group law") {
    ModelGroup g(2, 3);
    const auto& im = g.images();
    for (const auto& [a, ea] : im) {
      CHECK(g.is_identity(g.multiply(ea, g.inverse(ea))));
      for (const auto& [b, eb] : im) {
        for (const auto& [c, ec] : im) {
          CHECK(g.multiply(g.multiply(ea, eb), ec) == g.multiply(ea, g.multiply(eb, ec)));
        }
      }
    }
    CHECK_THROWS_AS(g.make({1, 0, 0, 0}, {0, 0, 0, 0}, Permutation(4)), Error);
  }

  TEST_CASE("generator images") {
    ModelGroup g(3, 2);
    const std::vector<int> zero(6, 0);
    const auto& g3 = g.images().at(GeneratorId::surface(3, false));
    CHECK(g3.x == zero);
    CHECK(g3.a == zero);
    CHECK(g3.sigma == Permutation::transposition(6, 2, 3));
    const auto& g3p = g.images().at(GeneratorId::surface(3, true));
    CHECK(g3p.a == g.diff(2, 3));
    CHECK(g3p.sigma == Permutation::transposition(6, 2, 3));
    // squares vanish
    for (const auto& [id, e] : g.images()) CHECK(g.is_identity(g.multiply(e, e)));
  }

  TEST_CASE("A and X images") {
    for (int n : {2, 3}) {
      ModelGroup g(n, 3);
      for (int k = 1; k <= 2 * n; ++k) {
        for (int l = 1; l <= 2 * n; ++l) {
          if (k == l) continue;
          auto a = evaluate(pair_symbol_surface_word(KernelSymbol::pair(KernelForm::Akl, k, l), n), g.images(), g.target());
          auto x = evaluate(pair_symbol_surface_word(KernelSymbol::pair(KernelForm::Xkl, k, l), n), g.images(), g.target());
          CHECK(a.sigma.is_identity());
          CHECK(a.a == g.diff(l, k));
          CHECK(x.x == g.diff(k, l));
          CHECK(x.a == std::vector<int>(2 * n, 0));
        }
      }
    }
  }

  TEST_CASE("homomorphism and derived relations") {
    for (int n = 2; n <= 4; ++n) {
      for (int m : {2, 3}) {
        CAPTURE(n);
        CAPTURE(m);
        ModelGroup g(n, m);
        auto rep = model_hom_check(pitilde_presentation(n, 0, true), g);
        CHECK(rep.relators.ok());
        CHECK(rep.failing_derived.empty());
        CHECK(rep.images_match_formulas);
        CHECK(rep.derived_checked > 0);
      }
    }
  }

  TEST_CASE("named kernel identities") {
    ModelGroup g(3, 3);
    CHECK(trivial_in(g, commutator(A(1, 2), X(1, 3)), 3));
    auto C = [](int k, int l) { return KernelSymbol::pair(KernelForm::Ckl, k, l).word(); };
    CHECK(trivial_in(g, C(3, 1) * C(2, 3) * C(1, 2), 3));
    CHECK(trivial_in(g, X(2, 6) * X(6, 1) * X(1, 2), 3));
    CHECK_FALSE(trivial_in(g, A(1, 2), 3));
    CHECK_FALSE(trivial_in(g, X(1, 2), 3));
  }

  TEST_CASE("image closure equals the model order") {
    for (int m : {2, 3}) {
      ModelGroup g(2, m);
      CHECK(image_closure_size(g, 100000) == g.order());
    }
    CHECK(image_closure_size(ModelGroup(2, 3), 100) == 100);
  }

  TEST_CASE("finite quotient relators") {
    auto p = pitilde_presentation(2, 0, true);
    auto q = finite_quotient_presentation(p, 2, 2);
    REQUIRE(q.relators.size() == p.relators.size() + 2);
    CHECK(q.relators[q.relators.size() - 2].size() == 4);
    CHECK(q.relators.back().size() == 12);
    auto q3 = finite_quotient_presentation(pitilde_presentation(3, 0, true), 2, 3);
    CHECK(q3.relators.back().size() == 20);
    CHECK_THROWS_AS(finite_quotient_presentation(p, 1, 2), Error);
    for (int m : {2, 3}) {
      ModelGroup g(2, m);
      auto fq = finite_quotient_presentation(p, m, 2);
      CHECK(verify_homomorphism(fq, g.images(), g.target()).ok());
    }
  }
}
