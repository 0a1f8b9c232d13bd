#include "galcov/degeneration.hpp"

#include <algorithm>
#include <string>

#include "galcov/word.hpp"

namespace galcov {

namespace {

bool share_vertex(const LineRecord& a, const LineRecord& b) {
  return a.endpoints.first == b.endpoints.first || a.endpoints.first == b.endpoints.second ||
         a.endpoints.second == b.endpoints.first || a.endpoints.second == b.endpoints.second;
}

}  // namespace

const LineRecord& IncidenceComplex::line(int i) const {
  if (i < 1 || i > line_count()) throw Error("line index " + std::to_string(i) + " out of range");
  return lines_[static_cast<std::size_t>(i - 1)];
}

const ThreePoint& IncidenceComplex::three_point(int k) const {
  if (k < 1 || k > 2 * n_) throw Error("3-point index " + std::to_string(k) + " out of range");
  return three_points_[static_cast<std::size_t>(k - 1)];
}

std::optional<int> IncidenceComplex::meeting_point(int i, int j) const {
  const auto& a = line(i);
  const auto& b = line(j);
  if (i == j) return std::nullopt;
  for (int v : {a.endpoints.first, a.endpoints.second}) {
    if (v == b.endpoints.first || v == b.endpoints.second) return v;
  }
  return std::nullopt;
}

IncidenceComplex build_complex(int n) {
  if (n < 2) throw Error("the degeneration needs n >= 2, got " + std::to_string(n));
  IncidenceComplex c;
  c.n_ = n;

  struct Raw {
    std::pair<int, int> ends;
    LineClass klass;
  };
  std::vector<Raw> raw;
  for (int k = 1; k <= n; ++k) raw.push_back({{k, n + k}, LineClass::Vertical});
  for (int k = 1; k < n; ++k) raw.push_back({{k, n + k + 1}, LineClass::Diagonal});
  raw.push_back({{n, n + 1}, LineClass::Diagonal});

  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    if (a.ends.second != b.ends.second) return a.ends.second < b.ends.second;
    return a.ends.first < b.ends.first;
  });

  const int m = 2 * n;
  for (int i = 1; i <= m; ++i) {
    LineRecord rec;
    rec.index = i;
    rec.endpoints = raw[static_cast<std::size_t>(i - 1)].ends;
    rec.klass = raw[static_cast<std::size_t>(i - 1)].klass;
    if (i == 1) {
      rec.adjacent_planes = {1, 2};
    } else if (i == 2) {
      rec.adjacent_planes = {m, 1};
    } else {
      rec.adjacent_planes = {i - 1, i};
    }
    c.lines_.push_back(rec);
  }

  for (int p = 1; p <= m; ++p) {
    PlaneRecord plane;
    plane.index = p;
    std::vector<int> on;
    for (const auto& l : c.lines_) {
      if (l.adjacent_planes.first == p || l.adjacent_planes.second == p) on.push_back(l.index);
    }
    if (on.size() != 2) throw Error("plane adjacency is inconsistent");
    plane.lines = {on[0], on[1]};
    for (int li : on) {
      plane.vertices.push_back(c.line(li).endpoints.first);
      plane.vertices.push_back(c.line(li).endpoints.second);
    }
    std::sort(plane.vertices.begin(), plane.vertices.end());
    plane.vertices.erase(std::unique(plane.vertices.begin(), plane.vertices.end()), plane.vertices.end());
    if (plane.vertices.size() != 3) throw Error("plane is not a triangle");
    c.planes_.push_back(plane);
  }

  for (int v = 1; v <= m; ++v) {
    ThreePoint tp;
    tp.index = v;
    tp.vertex = v;
    for (const auto& l : c.lines_) {
      if (l.endpoints.first != v && l.endpoints.second != v) continue;
      int& slot = l.klass == LineClass::Vertical ? tp.vertical_line : tp.diagonal_line;
      if (slot != 0) throw Error("vertex carries two lines of the same class");
      slot = l.index;
    }
    if (tp.vertical_line == 0 || tp.diagonal_line == 0) throw Error("vertex is not a 3-point");
    c.three_points_.push_back(tp);
  }

  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      if (!share_vertex(c.line(i), c.line(j))) c.incidental_.emplace_back(i, j);
    }
  }
  return c;
}

std::pair<int, int> three_point_lines(const IncidenceComplex& c, int k) {
  const auto& tp = c.three_point(k);
  return {tp.vertical_line, tp.diagonal_line};
}

std::vector<std::pair<int, int>> incidental_pairs(const IncidenceComplex& c) { return c.incidental_pairs(); }

}  // namespace galcov
