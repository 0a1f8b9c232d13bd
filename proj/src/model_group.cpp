#include "galcov/model_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "galcov/kernel.hpp"

namespace galcov {

namespace {

int mod(int v, int m) { return ((v % m) + m) % m; }

}  // namespace

ModelGroup::ModelGroup(int n, int m) : n_(n), m_(m) {
  if (n < 2) throw Error("model group needs n >= 2");
  if (m < 2) throw Error("model group needs m >= 2");
  const std::vector<int> zero(static_cast<std::size_t>(points()), 0);
  for (int j = 1; j <= points(); ++j) {
    Permutation t = psi_transposition(j, n);
    auto [a, b] = psi_points(j, n);
    if (j == 1) {
      images_[GeneratorId::surface(1, false)] = make(diff(2, 1), zero, t);
      images_[GeneratorId::surface(1, true)] = make(diff(2, 1), diff(1, 2), t);
    } else {
      images_[GeneratorId::surface(j, false)] = make(zero, zero, t);
      images_[GeneratorId::surface(j, true)] = make(zero, diff(a, b), t);
    }
  }
}

std::vector<int> ModelGroup::diff(int plus, int minus) const {
  std::vector<int> v(static_cast<std::size_t>(points()), 0);
  v[static_cast<std::size_t>(plus - 1)] = mod(v[static_cast<std::size_t>(plus - 1)] + 1, m_);
  v[static_cast<std::size_t>(minus - 1)] = mod(v[static_cast<std::size_t>(minus - 1)] - 1, m_);
  return v;
}

ModelElement ModelGroup::identity() const {
  const std::vector<int> zero(static_cast<std::size_t>(points()), 0);
  return {zero, zero, Permutation(static_cast<std::size_t>(points()))};
}

ModelElement ModelGroup::make(std::vector<int> x, std::vector<int> a, Permutation s) const {
  if (x.size() != static_cast<std::size_t>(points()) || a.size() != x.size() || s.degree() != x.size()) {
    throw Error("model element has wrong dimensions");
  }
  for (auto& v : x) v = mod(v, m_);
  for (auto& v : a) v = mod(v, m_);
  if (mod(std::accumulate(x.begin(), x.end(), 0), m_) != 0 || mod(std::accumulate(a.begin(), a.end(), 0), m_) != 0) {
    throw Error("model lattice vectors must sum to zero");
  }
  return {std::move(x), std::move(a), std::move(s)};
}

ModelElement ModelGroup::multiply(const ModelElement& p, const ModelElement& q) const {
  ModelElement r = identity();
  for (int i = 1; i <= points(); ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    const auto src = static_cast<std::size_t>(p.sigma(i) - 1);
    r.x[k] = (p.x[k] + q.x[src]) % m_;
    r.a[k] = (p.a[k] + q.a[src]) % m_;
  }
  r.sigma = p.sigma * q.sigma;
  return r;
}

ModelElement ModelGroup::inverse(const ModelElement& p) const {
  ModelElement r = identity();
  r.sigma = p.sigma.inverse();
  for (int i = 1; i <= points(); ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    const auto src = static_cast<std::size_t>(r.sigma(i) - 1);
    r.x[k] = mod(-p.x[src], m_);
    r.a[k] = mod(-p.a[src], m_);
  }
  return r;
}

bool ModelGroup::is_identity(const ModelElement& p) const { return p == identity(); }

std::uint64_t ModelGroup::order() const {
  std::uint64_t o = factorial(static_cast<std::size_t>(points()));
  for (int i = 0; i < 4 * n_ - 2; ++i) o *= static_cast<std::uint64_t>(m_);
  return o;
}

TargetGroup<ModelElement> ModelGroup::target() const {
  return {identity(), [this](const ModelElement& p, const ModelElement& q) { return multiply(p, q); },
          [this](const ModelElement& p) { return inverse(p); },
          [this](const ModelElement& p) { return is_identity(p); }};
}

std::uint64_t ModelGroup::key(const ModelElement& e) const {
  std::uint64_t k = e.sigma.rank();
  for (int i = 0; i < points() - 1; ++i) {
    k = k * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(e.x[static_cast<std::size_t>(i)]);
    k = k * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(e.a[static_cast<std::size_t>(i)]);
  }
  return k;
}

FreeWord pair_symbol_surface_word(const KernelSymbol& sym, int n) {
  if (!sym.is_pair_form()) throw Error("expected a pair symbol");
  const int len = 2 * n;
  if (sym.k > len || sym.l > len) throw Error("pair symbol index outside 1.." + std::to_string(len));
  // Smallest σ with σ(k) = 1, σ(l) = 2.
  std::vector<int> img(static_cast<std::size_t>(len), 0);
  img[static_cast<std::size_t>(sym.k - 1)] = 1;
  img[static_cast<std::size_t>(sym.l - 1)] = 2;
  int next = 3;
  for (auto& v : img) {
    if (v == 0) v = next++;
  }
  Permutation s = Permutation::from_images(img);
  switch (sym.form) {
    case KernelForm::Akl:
      return kernel_symbol_surface_word(KernelSymbol::a_sigma(s, 1), n);
    case KernelForm::Xkl:
      return kernel_symbol_surface_word(KernelSymbol::x_sigma(s), n);
    case KernelForm::Bkl:
      return kernel_symbol_surface_word(KernelSymbol::b_sigma(s), n);
    case KernelForm::Ckl: {
      FreeWord b = kernel_symbol_surface_word(KernelSymbol::b_sigma(s), n);
      FreeWord x = kernel_symbol_surface_word(KernelSymbol::x_sigma(s), n);
      return b * x.inverse() * b;
    }
    default:
      break;
  }
  throw Error("unreachable pair form");
}

FreeWord expand_to_surface(const FreeWord& w, int n) {
  FreeWord out;
  for (const auto& l : w) {
    FreeWord img;
    if (l.gen.alphabet == Alphabet::Surface) {
      img = FreeWord::of(l.gen);
    } else if (l.gen.alphabet == Alphabet::Kernel) {
      KernelSymbol s = KernelSymbol::from_id(l.gen);
      if (s.form == KernelForm::Ckl) {
        img = expand_to_surface(reduce_to_AX(s, n), n);
      } else {
        img = s.is_pair_form() ? pair_symbol_surface_word(s, n) : kernel_symbol_surface_word(s, n);
      }
    } else {
      throw Error("cannot expand " + generator_name(l.gen));
    }
    out.append_reduced(l.exp > 0 ? img : img.inverse());
  }
  return out;
}

std::vector<NamedRelation> derived_relations(int n) {
  const int m = 2 * n;
  std::vector<NamedRelation> out;
  auto sym = [](KernelForm f, int k, int l, int e = 1) { return KernelSymbol::pair(f, k, l).word(e); };
  auto Bw = [&](int k, int l, int e = 1) { return sym(KernelForm::Bkl, k, l, e); };
  auto Cw = [&](int k, int l, int e = 1) { return sym(KernelForm::Ckl, k, l, e); };
  auto tag = [](const std::string& s, std::initializer_list<int> idx) {
    std::string t = s;
    for (int i : idx) t += " " + std::to_string(i);
    return t;
  };

  for (int k = 1; k <= m; ++k) {
    for (int l = 1; l <= m; ++l) {
      if (k == l) continue;
      out.push_back({tag("X inverse", {k, l}), X(l, k) * X(k, l)});
      out.push_back({tag("B inverse", {k, l}), Bw(l, k) * Bw(k, l)});
      out.push_back({tag("C inverse", {k, l}), Cw(l, k) * Cw(k, l)});
      out.push_back({tag("B factor", {k, l}), Bw(k, l, -1) * X(k, l) * A(k, l)});
      out.push_back({tag("C definition", {k, l}), Bw(k, l) * X(k, l, -1) * Bw(k, l) * Cw(k, l, -1)});
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
          if (i != j) out.push_back({tag("A commutes with X", {i, j, k, l}), commutator(A(i, j), X(k, l))});
        }
      }
      for (int q = 1; q <= m; ++q) {
        if (q == k || q == l) continue;
        out.push_back({tag("X triangle", {k, l, q}), X(k, l) * X(l, q) * X(q, k)});
        out.push_back({tag("X triangle swapped", {k, l, q}), X(l, q) * X(k, l) * X(q, k)});
        out.push_back({tag("B triangle", {k, l, q}), Bw(k, l) * Bw(l, q) * Bw(q, k)});
        out.push_back({tag("B triangle swapped", {k, l, q}), Bw(l, q) * Bw(k, l) * Bw(q, k)});
        out.push_back({tag("C triangle", {k, l, q}), Cw(k, l) * Cw(l, q) * Cw(q, k)});
        out.push_back({tag("C triangle swapped", {k, l, q}), Cw(l, q) * Cw(k, l) * Cw(q, k)});
        out.push_back({tag("C cycle", {k, l, q}), Cw(q, k) * Cw(l, q) * Cw(k, l)});
        // i = k, j = l, third index q
        out.push_back({tag("A row commute", {k, l, q}), commutator(A(k, l), A(k, q))});
        out.push_back({tag("A column commute", {k, l, q}), commutator(A(l, k), A(q, k))});
        out.push_back({tag("A projective", {k, l, q}), A(k, l, -1) * A(q, l) * A(k, q)});
        out.push_back({tag("A chain commute", {k, l, q}), commutator(A(k, l), A(l, q))});
        for (int r = 1; r <= m; ++r) {
          if (r == k || r == l || r == q) continue;
          out.push_back({tag("A square", {k, l, q, r}), A(k, l) * A(k, q, -1) * A(l, r) * A(q, r, -1)});
          out.push_back({tag("A square shifted", {k, l, q, r}), A(k, l) * A(k, q, -1) * A(r, q) * A(r, l, -1)});
        }
      }
    }
  }

  // Conjugation action σ^-1 S_kl σ = S_σ(k)σ(l).
  const std::uint64_t total = factorial(static_cast<std::size_t>(m));
  const std::uint64_t step = total > 720 ? total / 720 : 1;
  for (std::uint64_t rank = 0; rank < total; rank += step) {
    const Permutation s = Permutation::unrank(static_cast<std::size_t>(m), rank);
    FreeWord w = phi_word(s, n);
    for (KernelForm f : {KernelForm::Akl, KernelForm::Xkl, KernelForm::Bkl}) {
      for (int k = 1; k <= m; ++k) {
        for (int l = 1; l <= m; ++l) {
          if (k == l) continue;
          out.push_back({"action " + s.cycles() + " " + std::to_string(static_cast<int>(f)) + " " +
                             std::to_string(k) + "," + std::to_string(l),
                         w.inverse() * sym(f, k, l) * w * sym(f, s(k), s(l), -1)});
        }
      }
    }
  }
  return out;
}

ModelCheckReport model_hom_check(const GroupPresentation& p, const ModelGroup& g) {
  ModelCheckReport rep;
  auto target = g.target();
  rep.relators = verify_homomorphism(p, g.images(), target);
  const int n = g.n();
  for (const auto& rel : derived_relations(n)) {
    ++rep.derived_checked;
    if (!target.is_identity(evaluate(expand_to_surface(rel.word, n), g.images(), target))) {
      rep.failing_derived.push_back(rel.name);
    }
  }
  const auto id = Permutation(static_cast<std::size_t>(g.points()));
  const std::vector<int> zero(static_cast<std::size_t>(g.points()), 0);
  for (int k = 1; k <= g.points(); ++k) {
    for (int l = 1; l <= g.points(); ++l) {
      if (k == l) continue;
      auto a = evaluate(pair_symbol_surface_word(KernelSymbol::pair(KernelForm::Akl, k, l), n), g.images(), target);
      auto x = evaluate(pair_symbol_surface_word(KernelSymbol::pair(KernelForm::Xkl, k, l), n), g.images(), target);
      if (!(a == g.make(zero, g.diff(l, k), id)) || !(x == g.make(g.diff(k, l), zero, id))) {
        rep.images_match_formulas = false;
      }
    }
  }
  return rep;
}

GroupPresentation finite_quotient_presentation(const GroupPresentation& ptilde_proj, int m, int n) {
  if (m < 2) throw Error("quotient exponent must be at least 2");
  GroupPresentation q = ptilde_proj;
  q.name = ptilde_proj.name + "+mod" + std::to_string(m);
  const FreeWord a = gamma(1) * gamma(1, true);
  const FreeWord x = phi_word(psi_transposition(1, n), n) * gamma(1);
  q.add_relator(a.power(m), "A12 power");
  q.add_relator(x.power(m), "X12 power");
  return q;
}

std::uint64_t image_closure_size(const ModelGroup& g, std::uint64_t limit) {
  std::vector<ModelElement> gens;
  for (const auto& [id, e] : g.images()) gens.push_back(e);
  std::unordered_set<std::uint64_t> seen;
  std::deque<ModelElement> queue;
  ModelElement e = g.identity();
  seen.insert(g.key(e));
  queue.push_back(e);
  while (!queue.empty() && seen.size() < limit) {
    ModelElement cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      ModelElement nxt = g.multiply(cur, s);
      if (seen.insert(g.key(nxt)).second) queue.push_back(std::move(nxt));
    }
  }
  return std::min<std::uint64_t>(seen.size(), limit);
}

}  // namespace galcov
