#include "galcov/perm_monodromy.hpp"

#include <algorithm>
#include <numeric>

namespace galcov {

std::pair<int, int> psi_points(int line, int n) {
  if (n < 2 || line < 1 || line > 2 * n) throw Error("line " + std::to_string(line) + " outside 1.." + std::to_string(2 * n));
  if (line == 1) return {1, 2};
  if (line == 2) return {2 * n, 1};
  return {line - 1, line};
}

Permutation psi_transposition(int line, int n) {
  auto [a, b] = psi_points(line, n);
  return Permutation::transposition(static_cast<std::size_t>(2 * n), a, b);
}

Permutation psi_eval(const FreeWord& w, int n) {
  Permutation p(static_cast<std::size_t>(2 * n));
  for (const auto& l : w) {
    if (l.gen.alphabet != Alphabet::Surface) throw Error("psi is defined on surface generators only, got " + generator_name(l.gen));
    p = p * psi_transposition(static_cast<int>(l.gen.index), n);
  }
  return p;
}

FreeWord phi_word(const Permutation& p, int n) {
  const int len = 2 * n;
  if (static_cast<int>(p.degree()) != len) throw Error("phi expects a permutation of degree " + std::to_string(len));
  // Γ_3..Γ_2n, Γ_2 form a path through the points 2, 3, ..., 2n, 1.
  auto point_at = [&](int c) { return c < len ? c + 1 : 1; };
  auto slot_of = [&](int pt) { return pt == 1 ? len : pt - 1; };
  auto line_of_swap = [&](int c) { return c <= len - 2 ? c + 2 : 2; };

  std::vector<int> target_to_token(static_cast<std::size_t>(len) + 1);
  for (int c = 1; c <= len; ++c) target_to_token[static_cast<std::size_t>(slot_of(p(point_at(c))))] = c;

  std::vector<int> arr(static_cast<std::size_t>(len));
  std::iota(arr.begin(), arr.end(), 1);
  FreeWord w;
  for (int t = 1; t <= len; ++t) {
    const int tok = target_to_token[static_cast<std::size_t>(t)];
    int c = static_cast<int>(std::find(arr.begin(), arr.end(), tok) - arr.begin()) + 1;
    for (int k = c - 1; k >= t; --k) {
      std::swap(arr[static_cast<std::size_t>(k - 1)], arr[static_cast<std::size_t>(k)]);
      w.push_back({GeneratorId::surface(line_of_swap(k), false), 1});
    }
  }
  return w;
}

TargetGroup<Permutation> symmetric_group(int degree) {
  return {Permutation(static_cast<std::size_t>(degree)),
          [](const Permutation& a, const Permutation& b) { return a * b; },
          [](const Permutation& a) { return a.inverse(); },
          [](const Permutation& a) { return a.is_identity(); }};
}

std::map<GeneratorId, Permutation> psi_images(int n) {
  std::map<GeneratorId, Permutation> m;
  for (int j = 1; j <= 2 * n; ++j) {
    m[GeneratorId::surface(j, false)] = psi_transposition(j, n);
    m[GeneratorId::surface(j, true)] = psi_transposition(j, n);
  }
  return m;
}

std::vector<FreeWord> phi_defining_relations(int n) {
  const int len = 2 * n;
  // Path order of the cycle generators.
  std::vector<int> path;
  for (int j = 3; j <= len; ++j) path.push_back(j);
  path.push_back(2);
  std::vector<FreeWord> out;
  for (std::size_t a = 0; a < path.size(); ++a) {
    FreeWord ga = gamma(path[a]);
    out.push_back(ga * ga);
    for (std::size_t b = a + 1; b < path.size(); ++b) {
      FreeWord gb = gamma(path[b]);
      if (b == a + 1) {
        out.push_back(ga * gb * ga * gb * ga * gb);
      } else {
        out.push_back(ga * gb * ga * gb);
      }
    }
  }
  return out;
}

}  // namespace galcov
