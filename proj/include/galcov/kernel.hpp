// Reidemeister-Schreier presentation of Ker ψ with the split transversal
// {φ(σ)}: cosets are permutations, representatives are phi_word(σ).

#pragma once

#include <cstdint>
#include <optional>

#include "galcov/kernel_symbol.hpp"
#include "galcov/perm_monodromy.hpp"
#include "galcov/presentation.hpp"

namespace galcov {

// γ(σ, g) after identification: X_σ^-1, B_σ^-1, A_{σ,j}^-1, or nothing for
// unprimed Γ_j with j ≥ 2.
std::optional<FreeWord> gamma_symbol(const Permutation& sigma, GeneratorId g, int n);

// The unidentified γ(σ, g) = w(σ) g w(σψ(g))^-1 as a surface word.
FreeWord gamma_surface_word(const Permutation& sigma, GeneratorId g, int n);

// Rewrites w read from coset `start`; w must lie in the kernel.
FreeWord tau_rewrite(const FreeWord& w, int n);
FreeWord tau_rewrite_from(const FreeWord& w, const Permutation& start, int n);

// Kernel symbol expanded into A_kl / X_kl letters.
FreeWord reduce_to_AX(const KernelSymbol& sym, int n);
FreeWord reduce_word_to_AX(const FreeWord& w, int n);

// Surface word of a σ-indexed kernel symbol (inverse of the identification).
FreeWord kernel_symbol_surface_word(const KernelSymbol& sym, int n);

struct KernelOptions {
  std::uint64_t max_cosets = 40320;  // (2n)! budget
};

// Raw RS output: per coset σ the generators A[σ]1..A[σ]2n, X[σ], B[σ];
// relators τ(σ r σ^-1) and the definitions A[σ]1 = X[σ]^-1 B[σ].
GroupPresentation kernel_presentation(const GroupPresentation& ptilde, int n, const KernelOptions& opt = {});

// Raw kernel presentation pushed through reduce_to_AX.
GroupPresentation reduced_kernel_presentation(const GroupPresentation& ptilde, int n, const KernelOptions& opt = {});

std::vector<GeneratorId> pair_generators(int n);
FreeWord A(int k, int l, int exp = 1);
FreeWord X(int k, int l, int exp = 1);

GroupPresentation theorem100_presentation(int n, int window = 2);
GroupPresentation galois_presentation(int n, int window = 2);

}  // namespace galcov
