// The sheet monodromy ψ: Π̃₁ → S_2n and its splitting φ.

#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "galcov/permutation.hpp"
#include "galcov/presentation.hpp"

namespace galcov {

// Points swapped by ψ(Γ_j) = ψ(Γ_j').
std::pair<int, int> psi_points(int line, int n);
Permutation psi_transposition(int line, int n);
Permutation psi_eval(const FreeWord& w, int n);

// Canonical word in Γ_2..Γ_2n with ψ-image p.
FreeWord phi_word(const Permutation& p, int n);

struct HomReport {
  std::size_t checked = 0;
  std::vector<std::size_t> failing;  // relator indices
  bool ok() const { return failing.empty(); }
};

// A target group given by its law; images must cover every generator used.
template <class Elem>
struct TargetGroup {
  Elem identity;
  std::function<Elem(const Elem&, const Elem&)> multiply;
  std::function<Elem(const Elem&)> inverse;
  std::function<bool(const Elem&)> is_identity;
};

template <class Elem>
Elem evaluate(const FreeWord& w, const std::map<GeneratorId, Elem>& images, const TargetGroup<Elem>& g) {
  Elem acc = g.identity;
  for (const auto& l : w) {
    auto it = images.find(l.gen);
    if (it == images.end()) throw Error("no image for generator " + generator_name(l.gen));
    acc = g.multiply(acc, l.exp > 0 ? it->second : g.inverse(it->second));
  }
  return acc;
}

template <class Elem>
HomReport verify_homomorphism(const std::vector<FreeWord>& relators, const std::map<GeneratorId, Elem>& images,
                              const TargetGroup<Elem>& g) {
  HomReport r;
  for (std::size_t i = 0; i < relators.size(); ++i) {
    ++r.checked;
    if (!g.is_identity(evaluate(relators[i], images, g))) r.failing.push_back(i);
  }
  return r;
}

template <class Elem>
HomReport verify_homomorphism(const GroupPresentation& p, const std::map<GeneratorId, Elem>& images,
                              const TargetGroup<Elem>& g) {
  return verify_homomorphism(p.relators, images, g);
}

TargetGroup<Permutation> symmetric_group(int degree);
std::map<GeneratorId, Permutation> psi_images(int n);

// Relations defining S_2n on the cycle generators (Γ_2..Γ_2n): squares, far
// commutation and adjacent braid relations. These must hold in Π̃₁ for φ to
// be well defined.
std::vector<FreeWord> phi_defining_relations(int n);

}  // namespace galcov
