#include "galcov/kernel.hpp"

#include <set>

namespace galcov {

namespace {

void require_surface(GeneratorId g) {
  if (g.alphabet != Alphabet::Surface) throw Error("expected a surface generator, got " + generator_name(g));
}

int free_index(int a, int b) {
  int x = 1;
  while (x == a || x == b) ++x;
  return x;
}

}  // namespace

std::optional<FreeWord> gamma_symbol(const Permutation& sigma, GeneratorId g, int n) {
  require_surface(g);
  const int j = static_cast<int>(g.index);
  if (j < 1 || j > 2 * n) throw Error("generator " + generator_name(g) + " outside 1.." + std::to_string(2 * n));
  if (j == 1) return (g.primed ? KernelSymbol::b_sigma(sigma) : KernelSymbol::x_sigma(sigma)).word(-1);
  if (!g.primed) return std::nullopt;
  return KernelSymbol::a_sigma(sigma, j).word(-1);
}

FreeWord gamma_surface_word(const Permutation& sigma, GeneratorId g, int n) {
  require_surface(g);
  Permutation next = sigma * psi_transposition(static_cast<int>(g.index), n);
  return phi_word(sigma, n) * FreeWord::of(g) * phi_word(next, n).inverse();
}

FreeWord tau_rewrite_from(const FreeWord& w, const Permutation& start, int n) {
  Permutation coset = start;
  FreeWord out;
  for (const auto& l : w) {
    require_surface(l.gen);
    const Permutation t = psi_transposition(static_cast<int>(l.gen.index), n);
    if (l.exp > 0) {
      if (auto s = gamma_symbol(coset, l.gen, n)) out.append_reduced(*s);
      coset = coset * t;
    } else {
      coset = coset * t;
      if (auto s = gamma_symbol(coset, l.gen, n)) out.append_reduced(s->inverse());
    }
  }
  if (coset != start) throw Error("word " + to_string(w) + " is not in the kernel of psi");
  return out;
}

FreeWord tau_rewrite(const FreeWord& w, int n) {
  return tau_rewrite_from(w, Permutation(static_cast<std::size_t>(2 * n)), n);
}

FreeWord A(int k, int l, int exp) { return KernelSymbol::pair(KernelForm::Akl, k, l).word(exp); }
FreeWord X(int k, int l, int exp) { return KernelSymbol::pair(KernelForm::Xkl, k, l).word(exp); }

FreeWord reduce_to_AX(const KernelSymbol& sym, int n) {
  const Permutation& s = sym.sigma;
  switch (sym.form) {
    case KernelForm::Akl:
    case KernelForm::Xkl:
      return sym.word();
    case KernelForm::Bkl:
      return X(sym.k, sym.l) * A(sym.k, sym.l);
    case KernelForm::Ckl:
      return X(sym.k, sym.l) * A(sym.k, sym.l, 2);
    case KernelForm::Xsigma:
      return X(s.preimage(1), s.preimage(2));
    case KernelForm::Bsigma:
      return X(s.preimage(1), s.preimage(2)) * A(s.preimage(1), s.preimage(2));
    case KernelForm::AsigmaJ: {
      if (sym.j == 1) return A(s.preimage(1), s.preimage(2));
      auto [a, b] = psi_points(sym.j, n);
      const int x = free_index(a, b);
      return A(s.preimage(a), s.preimage(x)) * A(s.preimage(b), s.preimage(x), -1);
    }
    case KernelForm::RawGamma: {
      auto g = gamma_symbol(s, GeneratorId::surface(sym.j, sym.primed), n);
      return g ? reduce_word_to_AX(*g, n) : FreeWord();
    }
  }
  throw Error("unknown kernel symbol form");
}

FreeWord reduce_word_to_AX(const FreeWord& w, int n) {
  FreeWord out;
  for (const auto& l : w) {
    if (l.gen.alphabet != Alphabet::Kernel) throw Error("expected a kernel symbol, got " + generator_name(l.gen));
    FreeWord img = reduce_to_AX(KernelSymbol::from_id(l.gen), n);
    out.append_reduced(l.exp > 0 ? img : img.inverse());
  }
  return out;
}

FreeWord kernel_symbol_surface_word(const KernelSymbol& sym, int n) {
  const Permutation& s = sym.sigma;
  switch (sym.form) {
    case KernelForm::Xsigma:
      return gamma_surface_word(s, GeneratorId::surface(1, false), n).inverse();
    case KernelForm::Bsigma:
      return gamma_surface_word(s, GeneratorId::surface(1, true), n).inverse();
    case KernelForm::AsigmaJ:
      if (sym.j == 1) {
        return gamma_surface_word(s, GeneratorId::surface(1, false), n) *
               gamma_surface_word(s, GeneratorId::surface(1, true), n).inverse();
      }
      return gamma_surface_word(s, GeneratorId::surface(sym.j, true), n).inverse();
    case KernelForm::RawGamma:
      return gamma_surface_word(s, GeneratorId::surface(sym.j, sym.primed), n);
    default:
      throw Error("pair symbols have no canonical surface word here");
  }
}

GroupPresentation kernel_presentation(const GroupPresentation& ptilde, int n, const KernelOptions& opt) {
  const std::uint64_t cosets = factorial(static_cast<std::size_t>(2 * n));
  if (cosets > opt.max_cosets) {
    throw Error("kernel presentation needs " + std::to_string(cosets) + " cosets, budget is " + std::to_string(opt.max_cosets));
  }
  GroupPresentation k;
  k.name = "kernel-raw";
  k.n = n;
  const auto perms = all_permutations(static_cast<std::size_t>(2 * n));
  for (const auto& s : perms) {
    for (int j = 1; j <= 2 * n; ++j) k.generators.push_back(KernelSymbol::a_sigma(s, j).id());
    k.generators.push_back(KernelSymbol::x_sigma(s).id());
    k.generators.push_back(KernelSymbol::b_sigma(s).id());
  }
  for (const auto& s : perms) {
    k.add_relator(KernelSymbol::a_sigma(s, 1).word(-1) * KernelSymbol::x_sigma(s).word(-1) * KernelSymbol::b_sigma(s).word(),
                  "definition A[" + s.cycles() + "]1");
  }
  for (const auto& s : perms) {
    for (std::size_t i = 0; i < ptilde.relators.size(); ++i) {
      k.add_relator(tau_rewrite_from(ptilde.relators[i], s, n), "tau " + ptilde.provenance[i] + " at " + s.cycles());
    }
  }
  return k;
}

std::vector<GeneratorId> pair_generators(int n) {
  std::vector<GeneratorId> out;
  for (KernelForm f : {KernelForm::Xkl, KernelForm::Akl}) {
    for (int i = 1; i <= 2 * n; ++i) {
      for (int j = 1; j <= 2 * n; ++j) {
        if (i != j) out.push_back(KernelSymbol::pair(f, i, j).id());
      }
    }
  }
  return out;
}

GroupPresentation reduced_kernel_presentation(const GroupPresentation& ptilde, int n, const KernelOptions& opt) {
  GroupPresentation raw = kernel_presentation(ptilde, n, opt);
  GroupPresentation k;
  k.name = "kernel-reduced";
  k.n = n;
  k.generators = pair_generators(n);
  std::set<FreeWord> seen;
  for (std::size_t i = 0; i < raw.relators.size(); ++i) {
    FreeWord r = cyclically_reduce(reduce_word_to_AX(raw.relators[i], n));
    if (r.empty() || !seen.insert(r).second) continue;
    k.add_relator(r, raw.provenance[i]);
  }
  return k;
}

GroupPresentation theorem100_presentation(int n, int window) {
  if (window < 1) throw Error("window must be at least 1");
  GroupPresentation p;
  p.name = "theorem100";
  p.n = n;
  p.generators = pair_generators(n);
  const int m = 2 * n;
  auto xa = [](int i, int j, int e) { return X(i, j) * A(i, j, e); };
  for (int e = -window; e <= window; ++e) {
    const std::string tag = " e=" + std::to_string(e);
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) p.add_relator(xa(j, i, e) * xa(i, j, e), "inverse pair" + tag);
    }
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) {
        for (int k = i + 1; k <= m; ++k) {
          if (k == j) continue;
          p.add_relator(xa(i, j, e) * xa(j, k, e) * xa(k, i, e), "triangle" + tag);
          p.add_relator(xa(j, k, e) * xa(i, j, e) * xa(k, i, e), "triangle swapped" + tag);
        }
      }
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      for (int k = 1; k <= m; ++k) {
        for (int l = 1; l <= m; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          p.add_relator(A(i, j) * A(i, k, -1) * A(j, l) * A(k, l, -1), "A square");
        }
      }
    }
  }
  return p;
}

GroupPresentation galois_presentation(int n, int window) {
  GroupPresentation p = theorem100_presentation(n, window);
  p.name = "galois";
  const int m = 2 * n;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      for (int k = 1; k <= m; ++k) {
        if (i == j || j == k || i == k) continue;
        p.add_relator(A(i, j, -1) * A(k, j) * A(i, k), "projective");
      }
    }
  }
  return p;
}

}  // namespace galcov
