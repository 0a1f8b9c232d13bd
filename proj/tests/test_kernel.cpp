#include <doctest.h>

#include <random>

#include "galcov/coset_enumeration.hpp"
#include "galcov/kernel.hpp"
#include "galcov/model_group.hpp"
#include "galcov/smith.hpp"

using namespace galcov;

namespace {

Permutation cyc(std::size_t deg, std::vector<int> c) { return Permutation::from_cycle(deg, c); }

// Random word in the kernel of psi: a random surface word closed up by phi.
FreeWord random_kernel_word(std::mt19937& rng, int n, int len) {
  FreeWord w;
  for (int k = 0; k < len; ++k) {
    const int line = 1 + static_cast<int>(rng() % static_cast<unsigned>(2 * n));
    w.push_back({GeneratorId::surface(line, rng() % 2 == 1), rng() % 2 ? 1 : -1});
  }
  return w * phi_word(psi_eval(w, n), n).inverse();
}

// Expands identified kernel symbols back to surface words.
FreeWord expand(const FreeWord& w, int n) {
  FreeWord out;
  for (const auto& l : w) {
    const auto sym = KernelSymbol::from_id(l.gen);
    auto s = sym.is_pair_form() ? expand_to_surface(sym.word(), n) : kernel_symbol_surface_word(sym, n);
    out = out * (l.exp > 0 ? s : s.inverse());
  }
  return out;
}

}  // namespace

TEST_SUITE("kernel") {
  TEST_CASE("gamma symbols") {
    auto s = cyc(4, {1, 2, 3});
    CHECK(*gamma_symbol(s, GeneratorId::surface(1, false), 2) == KernelSymbol::x_sigma(s).word(-1));
    CHECK(*gamma_symbol(s, GeneratorId::surface(1, true), 2) == KernelSymbol::b_sigma(s).word(-1));
    CHECK(*gamma_symbol(s, GeneratorId::surface(3, true), 2) == KernelSymbol::a_sigma(s, 3).word(-1));
    CHECK_FALSE(gamma_symbol(s, GeneratorId::surface(3, false), 2).has_value());
    CHECK_THROWS_AS(gamma_symbol(s, GeneratorId::surface(5, false), 2), Error);
  }

  TEST_CASE("spot identities, sigma form") {
    const int n = 3;
    const Permutation I(6);
    CHECK(tau_rewrite(parse_word("g1 g1"), n) ==
          KernelSymbol::x_sigma(I).word(-1) * KernelSymbol::x_sigma(Permutation::transposition(6, 1, 2)).word(-1));
    CHECK(tau_rewrite(parse_word("g1 g2 g1 g2 g1 g2"), n) ==
          KernelSymbol::x_sigma(I).word(-1) * KernelSymbol::x_sigma(cyc(6, {1, 2, 6})).word(-1) *
              KernelSymbol::x_sigma(cyc(6, {6, 2, 1})).word(-1));
    CHECK(tau_rewrite(parse_word("g1 g3 g1 g3 g1 g3"), n) ==
          KernelSymbol::x_sigma(I).word(-1) * KernelSymbol::x_sigma(cyc(6, {3, 2, 1})).word(-1) *
              KernelSymbol::x_sigma(cyc(6, {1, 2, 3})).word(-1));
    // g1p g1 g1p ends in coset (1 2): read its symbols one by one
    const auto t12 = Permutation::transposition(6, 1, 2);
    CHECK(*gamma_symbol(I, GeneratorId::surface(1, true), n) == KernelSymbol::b_sigma(I).word(-1));
    CHECK(*gamma_symbol(t12, GeneratorId::surface(1, false), n) == KernelSymbol::x_sigma(t12).word(-1));
    CHECK(reduce_to_AX(KernelSymbol::x_sigma(t12), n) == X(2, 1));
  }

  TEST_CASE("spot identities, pair form") {
    const int n = 3;
    CHECK(reduce_word_to_AX(tau_rewrite(parse_word("g1 g1"), n), n) == X(1, 2, -1) * X(2, 1, -1));
    CHECK(reduce_word_to_AX(tau_rewrite(parse_word("g1 g2 g1 g2 g1 g2"), n), n) ==
          X(1, 2, -1) * X(6, 1, -1) * X(2, 6, -1));
    CHECK(reduce_word_to_AX(tau_rewrite(parse_word("g1 g3 g1 g3 g1 g3"), n), n) ==
          X(1, 2, -1) * X(2, 3, -1) * X(3, 1, -1));
  }

  TEST_CASE("words outside the kernel are rejected") {
    CHECK_THROWS_AS(tau_rewrite(parse_word("g1"), 2), Error);
  }

  TEST_CASE("tau telescopes freely through the unidentified symbols") {
    std::mt19937 rng(11);
    for (int n : {2, 3}) {
      for (int trial = 0; trial < 100; ++trial) {
        auto w = random_kernel_word(rng, n, 12);
        Permutation coset(static_cast<std::size_t>(2 * n));
        FreeWord prod;
        for (const auto& l : w) {
          const auto t = psi_transposition(static_cast<int>(l.gen.index), n);
          if (l.exp > 0) {
            prod = prod * gamma_surface_word(coset, l.gen, n);
            coset = coset * t;
          } else {
            coset = coset * t;
            prod = prod * gamma_surface_word(coset, l.gen, n).inverse();
          }
        }
        CHECK(reduce(prod) == reduce(w));
      }
    }
  }

  TEST_CASE("identified tau is correct in the finite quotients") {
    std::mt19937 rng(5);
    for (int m : {2, 3}) {
      auto fq = finite_quotient_presentation(pitilde_presentation(2, 0, true), m, 2);
      auto t = todd_coxeter(fq, {});
      REQUIRE(t.complete());
      for (int trial = 0; trial < 100; ++trial) {
        auto w = random_kernel_word(rng, 2, 14);
        auto e = expand(tau_rewrite(w, 2), 2);
        CHECK(t.trace(1, e * w.inverse()) == 1);
        auto ax = expand(reduce_word_to_AX(tau_rewrite(w, 2), 2), 2);
        CHECK(t.trace(1, ax * w.inverse()) == 1);
      }
    }
  }

  TEST_CASE("reduce_to_AX on sigma forms") {
    const int n = 3;
    auto s = cyc(6, {1, 4, 2});  // 1->4, 4->2, 2->1
    CHECK(reduce_to_AX(KernelSymbol::x_sigma(s), n) == X(s.preimage(1), s.preimage(2)));
    CHECK(reduce_to_AX(KernelSymbol::a_sigma(s, 1), n) == A(s.preimage(1), s.preimage(2)));
    CHECK(reduce_to_AX(KernelSymbol::b_sigma(s), n) == X(s.preimage(1), s.preimage(2)) * A(s.preimage(1), s.preimage(2)));
    CHECK(reduce_to_AX(KernelSymbol::pair(KernelForm::Ckl, 1, 3), n) == X(1, 3) * A(1, 3, 2));
  }

  TEST_CASE("raw kernel presentation at n = 2") {
    auto pt = pitilde_presentation(2, 0, true);
    auto raw = kernel_presentation(pt, 2);
    raw.validate();
    CHECK(raw.generators.size() == 24 * 6);
    CHECK(raw.relators.size() == 24 * (pt.relators.size() + 1));
    CHECK(smith_normal_form(abelianize(raw)).describe() == "Z^6");
    auto red = reduced_kernel_presentation(pt, 2);
    red.validate();
    CHECK(red.generators == pair_generators(2));
    CHECK(smith_normal_form(abelianize(red)).describe() == "Z^6");
  }

  TEST_CASE("kernel presentations at depth 1") {
    auto raw = kernel_presentation(pitilde_presentation(2, 1, true), 2);
    CHECK(smith_normal_form(abelianize(raw)).describe() == "Z^6");
  }

  TEST_CASE("Theorem 100 and galois presentations") {
    for (int n = 2; n <= 4; ++n) {
      CAPTURE(n);
      auto g = galois_presentation(n);
      g.validate();
      CHECK(g.generators.size() == static_cast<std::size_t>(2 * 2 * n * (2 * n - 1)));
      auto t = theorem100_presentation(n);
      CHECK(t.relators.size() < g.relators.size());
      CHECK(smith_normal_form(abelianize(g)).describe() == "Z^" + std::to_string(4 * n - 2));
    }
  }

  TEST_CASE("galois relators hold in the model") {
    for (int n : {2, 3}) {
      ModelGroup g(n, 3);
      for (const auto& r : galois_presentation(n).relators) {
        CHECK(g.is_identity(evaluate(expand_to_surface(r, n), g.images(), g.target())));
      }
    }
  }
}
