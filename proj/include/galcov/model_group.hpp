// The model extension ((Z/m)^{2n-1} ⊕ (Z/m)^{2n-1}) ⋊ S_2n.
//
// Elements are (x, a, σ) with x, a in (Z/m)^{2n} of coordinate sum 0, and
// (x, a, σ)(x', a', σ') = (x + σ·x', a + σ·a', σσ'), (σ·v)_i = v_{σ(i)}.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "galcov/kernel_symbol.hpp"
#include "galcov/perm_monodromy.hpp"
#include "galcov/presentation.hpp"

namespace galcov {

struct ModelElement {
  std::vector<int> x;
  std::vector<int> a;
  Permutation sigma;

  friend bool operator==(const ModelElement&, const ModelElement&) = default;
};

class ModelGroup {
 public:
  ModelGroup(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  int points() const { return 2 * n_; }

  ModelElement identity() const;
  ModelElement multiply(const ModelElement& p, const ModelElement& q) const;
  ModelElement inverse(const ModelElement& p) const;
  bool is_identity(const ModelElement& p) const;
  ModelElement make(std::vector<int> x, std::vector<int> a, Permutation s) const;

  // m^{4n-2} (2n)!
  std::uint64_t order() const;
  TargetGroup<ModelElement> target() const;

  // Images of Γ_j, Γ_j'.
  const std::map<GeneratorId, ModelElement>& images() const { return images_; }

  // Lattice vectors e_k - e_l style helpers (1-based).
  std::vector<int> diff(int plus, int minus) const;

  // Compact key for closure searches.
  std::uint64_t key(const ModelElement& e) const;

 private:
  int n_;
  int m_;
  std::map<GeneratorId, ModelElement> images_;
};

struct NamedRelation {
  std::string name;
  FreeWord word;  // over pair symbols A, X, B, C and surface generators
};

// Surface word of A_kl, X_kl, B_kl or C_kl through a σ with σ(k)=1, σ(l)=2.
FreeWord pair_symbol_surface_word(const KernelSymbol& sym, int n);

// Expand kernel symbols to surface words (pair symbols via reduce_to_AX).
FreeWord expand_to_surface(const FreeWord& w, int n);

// Derived kernel relations, plus the conjugation action.
std::vector<NamedRelation> derived_relations(int n);

struct ModelCheckReport {
  HomReport relators;
  std::vector<std::string> failing_derived;
  std::size_t derived_checked = 0;
  bool images_match_formulas = true;  // A_kl -> f_l - f_k, X_kl -> e_k - e_l
  bool ok() const { return relators.ok() && failing_derived.empty() && images_match_formulas; }
};

ModelCheckReport model_hom_check(const GroupPresentation& p, const ModelGroup& g);

// Adds (Γ_1 Γ_1')^m and (φ(1 2) Γ_1)^m, whose normal closure bounds every
// A_kl^m and X_kl^m.
GroupPresentation finite_quotient_presentation(const GroupPresentation& ptilde_proj, int m, int n);

// Size of the subgroup generated by the images (breadth-first closure),
// capped at `limit` elements.
std::uint64_t image_closure_size(const ModelGroup& g, std::uint64_t limit);

}  // namespace galcov
