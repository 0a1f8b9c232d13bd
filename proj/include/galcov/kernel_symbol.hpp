// Generator symbols of the kernel of the permutation monodromy.
//
//   R[σ]g      raw Schreier generator γ(σ, g) before identification
//   A[σ]j      A_{σ,j} = σ Γ_j Γ_j' σ^-1
//   X[σ], B[σ] X_σ = σ (1 2) Γ_1 σ^-1, B_σ = σ (1 2) Γ_1' σ^-1
//   Ak.l ...   A_{kl}, X_{kl}, B_{kl}, C_{kl} for distinct sheets k, l
//
// σ is spelled by its one-line images, e.g. X[2.1.3.4].

#pragma once

#include <string>
#include <string_view>

#include "galcov/permutation.hpp"
#include "galcov/word.hpp"

namespace galcov {

enum class KernelForm : std::uint8_t {
  RawGamma = 1,
  AsigmaJ = 2,
  Xsigma = 3,
  Bsigma = 4,
  Akl = 5,
  Xkl = 6,
  Bkl = 7,
  Ckl = 8,
};

struct KernelSymbol {
  KernelForm form = KernelForm::Akl;
  Permutation sigma;  // σ-indexed forms only
  int j = 0;          // A_{σ,j} index, or the line of a raw γ(σ, Γ)
  bool primed = false;
  int k = 0;
  int l = 0;

  static KernelSymbol raw(Permutation sigma, int line, bool primed);
  static KernelSymbol a_sigma(Permutation sigma, int j);
  static KernelSymbol x_sigma(Permutation sigma);
  static KernelSymbol b_sigma(Permutation sigma);
  static KernelSymbol pair(KernelForm form, int k, int l);

  bool is_pair_form() const;
  bool is_sigma_form() const { return !is_pair_form(); }

  GeneratorId id() const;
  static KernelSymbol from_id(GeneratorId g);

  std::string name() const;
  static KernelSymbol parse(std::string_view token);

  FreeWord word(int exp = 1) const { return FreeWord::of(id(), exp); }

  friend bool operator==(const KernelSymbol&, const KernelSymbol&) = default;
};

}  // namespace galcov
