// Incidence data of the degenerated surface: a cycle of n quadrics, each
// split along a diagonal into two planes.
//
// Vertices 1..n run along the bottom row and n+1..2n along the top row.
// Vertical k joins (k, n+k); diagonal k joins (k, n+k+1) for k < n, and
// diagonal n closes the cycle at (n, n+1). Lines are numbered by sorting
// their endpoint pairs reverse-lexicographically.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "galcov/word.hpp"

namespace galcov {

enum class LineClass { Vertical, Diagonal };

struct LineRecord {
  int index = 0;
  std::pair<int, int> endpoints;  // first < second
  LineClass klass = LineClass::Vertical;
  std::pair<int, int> adjacent_planes;
};

struct ThreePoint {
  int index = 0;   // V_k
  int vertex = 0;  // k
  int vertical_line = 0;
  int diagonal_line = 0;
};

struct PlaneRecord {
  int index = 0;
  std::pair<int, int> lines;
  std::vector<int> vertices;  // sorted triangle corners
};

class IncidenceComplex {
 public:
  int n() const { return n_; }
  int line_count() const { return 2 * n_; }

  const std::vector<LineRecord>& lines() const { return lines_; }
  const std::vector<ThreePoint>& three_points() const { return three_points_; }
  const std::vector<PlaneRecord>& planes() const { return planes_; }
  const std::vector<std::pair<int, int>>& incidental_pairs() const { return incidental_; }

  const LineRecord& line(int i) const;
  const ThreePoint& three_point(int k) const;

  // Index of the 3-point where two distinct lines meet, if they meet at all.
  std::optional<int> meeting_point(int i, int j) const;
  bool lines_disjoint(int i, int j) const { return !meeting_point(i, j).has_value(); }

 private:
  friend IncidenceComplex build_complex(int n);

  int n_ = 0;
  std::vector<LineRecord> lines_;
  std::vector<ThreePoint> three_points_;
  std::vector<PlaneRecord> planes_;
  std::vector<std::pair<int, int>> incidental_;
};

IncidenceComplex build_complex(int n);

// (vertical, diagonal) line indices at V_k.
std::pair<int, int> three_point_lines(const IncidenceComplex& c, int k);

// Vertex-disjoint line pairs (i < j), ascending.
std::vector<std::pair<int, int>> incidental_pairs(const IncidenceComplex& c);

}  // namespace galcov
