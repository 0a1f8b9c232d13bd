#include <doctest.h>

#include <algorithm>
#include <set>

#include "galcov/degeneration.hpp"

using namespace galcov;

TEST_SUITE("degeneration") {
  TEST_CASE("census n = 2..6") {
    for (int n = 2; n <= 6; ++n) {
      CAPTURE(n);
      auto c = build_complex(n);
      CHECK(c.line_count() == 2 * n);
      CHECK(c.planes().size() == static_cast<std::size_t>(2 * n));
      CHECK(c.three_points().size() == static_cast<std::size_t>(2 * n));
      CHECK(c.incidental_pairs().size() == static_cast<std::size_t>(2 * n * n - 3 * n));
      std::set<int> vertices;
      for (const auto& l : c.lines()) {
        vertices.insert(l.endpoints.first);
        vertices.insert(l.endpoints.second);
      }
      CHECK(vertices.size() == static_cast<std::size_t>(2 * n));
    }
  }

  TEST_CASE("line classes, order and adjacent planes") {
    for (int n = 2; n <= 5; ++n) {
      auto c = build_complex(n);
      CHECK(c.line(1).klass == LineClass::Vertical);
      CHECK(c.line(2).klass == LineClass::Diagonal);
      for (int i = 3; i <= 2 * n; ++i) CHECK(c.line(i).klass == (i % 2 ? LineClass::Diagonal : LineClass::Vertical));
      for (int i = 1; i < 2 * n; ++i) {
        auto a = c.line(i).endpoints, b = c.line(i + 1).endpoints;
        CHECK(std::make_pair(a.second, a.first) < std::make_pair(b.second, b.first));
      }
      CHECK(c.line(1).adjacent_planes == std::make_pair(1, 2));
      CHECK(c.line(2).adjacent_planes == std::make_pair(2 * n, 1));
      for (int i = 3; i <= 2 * n; ++i) CHECK(c.line(i).adjacent_planes == std::make_pair(i - 1, i));
    }
  }

  TEST_CASE("n = 2 endpoints") {
    auto c = build_complex(2);
    CHECK(c.line(1).endpoints == std::make_pair(1, 3));
    CHECK(c.line(2).endpoints == std::make_pair(2, 3));
  }

  TEST_CASE("three points at n = 3") {
    auto c = build_complex(3);
    CHECK(three_point_lines(c, 1) == std::make_pair(1, 3));
    CHECK(three_point_lines(c, 3) == std::make_pair(6, 2));
    CHECK(three_point_lines(c, 4) == std::make_pair(1, 2));
    CHECK(three_point_lines(c, 5) == std::make_pair(4, 3));
    CHECK_THROWS_AS(three_point_lines(c, 7), Error);
    for (const auto& t : c.three_points()) {
      CHECK(c.line(t.vertical_line).klass == LineClass::Vertical);
      CHECK(c.line(t.diagonal_line).klass == LineClass::Diagonal);
    }
  }

  TEST_CASE("pairs are incidental or meet at one 3-point") {
    for (int n = 2; n <= 5; ++n) {
      auto c = build_complex(n);
      const auto& inc = c.incidental_pairs();
      for (int i = 1; i <= 2 * n; ++i) {
        for (int j = i + 1; j <= 2 * n; ++j) {
          const bool incidental = std::find(inc.begin(), inc.end(), std::make_pair(i, j)) != inc.end();
          int meets = 0;
          for (const auto& t : c.three_points()) {
            auto [v, d] = three_point_lines(c, t.index);
            meets += (std::min(v, d) == i && std::max(v, d) == j);
          }
          CHECK(incidental != (meets == 1));
          CHECK(meets <= 1);
          CHECK(incidental == c.lines_disjoint(i, j));
        }
      }
    }
    auto c3 = build_complex(3);
    const auto& inc = c3.incidental_pairs();
    CHECK(std::count(inc.begin(), inc.end(), std::make_pair(1, 4)) == 1);
    CHECK(std::count(inc.begin(), inc.end(), std::make_pair(2, 5)) == 1);
    CHECK(std::count(inc.begin(), inc.end(), std::make_pair(1, 2)) == 0);
  }

  TEST_CASE("n < 2 is rejected") {
    CHECK_THROWS_AS(build_complex(1), Error);
    CHECK_THROWS_AS(build_complex(0), Error);
  }
}
