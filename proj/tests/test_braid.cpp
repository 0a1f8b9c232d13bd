#include <doctest.h>

#include <random>

#include "galcov/braid.hpp"

using namespace galcov;

namespace {

FreeWord x(int p) { return FreeWord::of(PuncturedFiber::loop(p)); }
BraidWord s(int i, int e = 1) { return FreeWord::of(GeneratorId::artin(i), e); }

// Direct automorphism of σ_i^e on the free group, applied by substitution
// letter after letter.
Substitution sigma_auto(int i, int e) {
  if (e > 0) return {{PuncturedFiber::loop(i), x(i) * x(i + 1) * x(i).inverse()}, {PuncturedFiber::loop(i + 1), x(i)}};
  return {{PuncturedFiber::loop(i), x(i + 1)}, {PuncturedFiber::loop(i + 1), x(i + 1).inverse() * x(i) * x(i + 1)}};
}

FreeWord oracle_apply(const BraidWord& b, FreeWord w, int m) {
  for (const auto& l : b) {
    auto sub = sigma_auto(static_cast<int>(l.gen.index), l.exp);
    for (int p = 1; p <= m; ++p) sub.emplace(PuncturedFiber::loop(p), x(p));
    w = reduce(substitute(w, sub));
  }
  return w;
}

}  // namespace

TEST_SUITE("braid") {
  TEST_CASE("fiber positions") {
    CHECK(PuncturedFiber::position(3, false) == 5);
    CHECK(PuncturedFiber::position(3, true) == 6);
    CHECK(PuncturedFiber::line_of(6) == 3);
    CHECK(PuncturedFiber::primed_at(6));
  }

  TEST_CASE("paths") {
    auto c = build_complex(3);
    auto under = make_path(PathKind::Under, 1, 5, c);
    for (auto p : under.passage) CHECK(p == Passage::Under);
    // line 2 to line 5: over everything
    auto t25 = make_path(PathKind::Tilde, 3, 9, c);
    for (auto p : t25.passage) CHECK(p == Passage::Over);
    // line 1 to line 4: under 3, 3', over 1', 2, 2'
    auto t14 = make_path(PathKind::Tilde, 1, 7, c);
    CHECK(t14.at(2) == Passage::Over);
    CHECK(t14.at(3) == Passage::Over);
    CHECK(t14.at(4) == Passage::Over);
    CHECK(t14.at(5) == Passage::Under);
    CHECK(t14.at(6) == Passage::Under);
    CHECK_THROWS_AS(make_path(PathKind::Tilde, 4, 4, c), Error);
    CHECK_THROWS_AS(make_path(PathKind::Tilde, 5, 2, c), Error);
  }

  TEST_CASE("half twists") {
    auto c = build_complex(2);
    auto adj = make_path(PathKind::Tilde, 2, 3, c);
    CHECK(half_twist(adj, 1) == s(2));
    auto p = make_path(PathKind::Under, 1, 4, c);
    CHECK(exponent_sum(half_twist(p, 2)) == 2);
    CHECK(braid_permutation(half_twist(p, 2), 8).is_identity());
    CHECK(braid_permutation(half_twist(p, 1), 8) == Permutation::transposition(8, 1, 4));
    CHECK_THROWS_AS(half_twist(p, 4), Error);
  }

  TEST_CASE("factor census") {
    for (int n = 2; n <= 6; ++n) {
      CAPTURE(n);
      auto fs = full_factorization(build_complex(n));
      int br = 0, cu = 0, no = 0;
      long deg = 0;
      for (const auto& f : fs) {
        const int want = f.kind == FactorKind::Branch ? 1 : f.kind == FactorKind::Cusp ? 3 : 2;
        CHECK(f.exponent == want);
        br += f.kind == FactorKind::Branch;
        cu += f.kind == FactorKind::Cusp;
        no += f.kind == FactorKind::Node;
        CHECK(exponent_sum(f.braid()) == f.exponent);
        for (const auto& l : f.braid()) CHECK((l.gen.index >= 1 && l.gen.index <= static_cast<std::uint64_t>(4 * n - 1)));
        deg += f.exponent;
      }
      CHECK(br == 2 * n);
      CHECK(cu == 6 * n);
      CHECK(no == 8 * n * n - 12 * n);
      CHECK(deg == 16L * n * n - 4L * n);
      CHECK(deg == exponent_sum(full_twist(4 * n)));
      CHECK(braid_permutation(product(fs), 4 * n).is_identity());
    }
  }

  TEST_CASE("regeneration of V1 at n = 3") {
    auto c = build_complex(3);
    auto fs = regenerate(Singularity::at_three_point(c, 1), c);
    REQUIRE(fs.size() == 4);
    for (int k = 0; k < 3; ++k) CHECK(fs[k].kind == FactorKind::Cusp);
    CHECK(fs[3].kind == FactorKind::Branch);
    CHECK(braid_permutation(fs[3].braid(), 12) == Permutation::transposition(12, 5, 6));
    auto nodes = regenerate(Singularity::incidental(1, 4), c);
    CHECK(nodes.size() == 4);
    CHECK_THROWS_AS(regenerate(Singularity::incidental(1, 2), c), Error);
  }

  TEST_CASE("braid permutations") {
    CHECK(braid_permutation(s(1), 4) == Permutation::transposition(4, 1, 2));
    CHECK(braid_permutation(s(1, 1) * s(1, 1), 4).is_identity());
    CHECK(braid_permutation(full_twist(6), 6).is_identity());
    CHECK(exponent_sum(full_twist(12)) == 132);
    CHECK(full_twist(2) == s(1) * s(1));
  }

  TEST_CASE("Artin action basics") {
    CHECK(artin_apply(s(1), x(1), 3) == x(1) * x(2) * x(1).inverse());
    auto w = x(1) * x(3) * x(2).inverse();
    CHECK(artin_apply(s(2) * s(2, -1), w, 3) == w);
    CHECK(braids_equal(s(1) * s(2) * s(1), s(2) * s(1) * s(2), 3));
    CHECK_FALSE(braids_equal(s(1), s(2), 3));
    CHECK(braids_equal(s(1) * s(3), s(3) * s(1), 4));
  }

  TEST_CASE("Artin action agrees with the substitution oracle") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const int m = 3 + static_cast<int>(rng() % 3);
      BraidWord b;
      for (int k = 0; k < 10; ++k) b.push_back({GeneratorId::artin(1 + static_cast<int>(rng() % (m - 1))), rng() % 2 ? 1 : -1});
      auto imgs = artin_images(b, m);
      for (int p = 1; p <= m; ++p) CHECK(imgs[p - 1] == oracle_apply(b, x(p), m));
    }
  }

  TEST_CASE("full twist acts by conjugation with x1...xm") {
    for (int m : {3, 4}) {
      FreeWord d;
      for (int p = 1; p <= m; ++p) d = d * x(p);
      for (int k = 1; k <= m; ++k) {
        auto expect = reduce(d * x(k) * d.inverse());
        CHECK(oracle_apply(full_twist(m), x(k), m) == expect);
        CHECK(artin_apply(full_twist(m), x(k), m) == expect);
      }
    }
  }

  TEST_CASE("tuple action matches evaluated images") {
    std::mt19937 rng(3);
    const int m = 5;
    for (int trial = 0; trial < 50; ++trial) {
      BraidWord b;
      for (int k = 0; k < 8; ++k) b.push_back({GeneratorId::artin(1 + static_cast<int>(rng() % (m - 1))), rng() % 2 ? 1 : -1});
      std::vector<Permutation> tuple;
      for (int k = 0; k < m; ++k) tuple.push_back(Permutation::unrank(5, rng() % 120));
      auto acted = artin_act_on_tuple(b, tuple);
      auto imgs = artin_images(b, m);
      for (int p = 0; p < m; ++p) {
        Permutation v(5);
        for (const auto& l : imgs[p]) {
          const auto& t = tuple[PuncturedFiber::position(static_cast<int>(l.gen.index), l.gen.primed) - 1];
          v = v * (l.exp > 0 ? t : t.inverse());
        }
        CHECK(v == acted[p]);
      }
    }
  }

  TEST_CASE("size cap is enforced") {
    CHECK_THROWS_AS(artin_images(full_twist(12), 12, 10), Error);
    CHECK_NOTHROW(artin_images(full_twist(12), 12, 50));
  }

  TEST_CASE("delta square check on a known equality") {
    BraidWord b;
    for (int r = 0; r < 6; ++r)
      for (int i = 5; i >= 1; --i) b.push_back({GeneratorId::artin(i), 1});
    auto r = delta_square_check(b, 6);
    CHECK(r.equal());
    CHECK(r.exact_checked);
    auto bad = delta_square_check(b * s(1, 2) * s(2, -2), 6);
    CHECK_FALSE(bad.equal());
    CHECK_FALSE(bad.fingerprint.empty());
  }
}
