#include "galcov/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace galcov {

void GroupPresentation::add_relator(const FreeWord& r, std::string origin) {
  relators.push_back(reduce(r));
  provenance.push_back(std::move(origin));
}

bool GroupPresentation::has_generator(GeneratorId g) const {
  return std::find(generators.begin(), generators.end(), g) != generators.end();
}

void GroupPresentation::validate() const {
  std::set<GeneratorId> gens(generators.begin(), generators.end());
  if (gens.size() != generators.size()) throw Error("presentation " + name + " declares a generator twice");
  if (provenance.size() != relators.size()) throw Error("presentation " + name + " has mismatched provenance");
  for (std::size_t i = 0; i < relators.size(); ++i) {
    for (const auto& l : relators[i]) {
      if (!gens.count(l.gen)) {
        throw Error("relator " + std::to_string(i + 1) + " of " + name + " uses undeclared generator " + generator_name(l.gen));
      }
    }
  }
}

std::size_t GroupPresentation::total_length() const {
  std::size_t s = 0;
  for (const auto& r : relators) s += r.size();
  return s;
}

std::vector<GeneratorId> surface_generators(int n) {
  std::vector<GeneratorId> g;
  for (int j = 1; j <= 2 * n; ++j) {
    g.push_back(GeneratorId::surface(j, false));
    g.push_back(GeneratorId::surface(j, true));
  }
  return g;
}

FreeWord gamma(int line, bool primed, int exp) { return FreeWord::of(GeneratorId::surface(line, primed), exp); }

FreeWord relator_from_factor(const MonodromyFactor& f) {
  const int strands = f.core + 1;
  BraidWord cinv = f.conjugator.inverse();
  int width = strands;
  for (const auto& l : f.conjugator) width = std::max(width, static_cast<int>(l.gen.index) + 1);
  FreeWord u = artin_apply(cinv, FreeWord::of(PuncturedFiber::loop(f.core)), width);
  FreeWord v = artin_apply(cinv, FreeWord::of(PuncturedFiber::loop(f.core + 1)), width);
  switch (f.exponent) {
    case 1: {
      FreeWord r = v.inverse() * u;
      // Rotate to open with the diagonal's primed loop inverted.
      const GeneratorId jp = GeneratorId::surface(f.source.second, true);
      auto it = std::find_if(r.begin(), r.end(), [&](const Letter& l) { return l.gen == jp && l.exp < 0; });
      if (it != r.end()) {
        std::vector<Letter> rot(it, r.end());
        rot.insert(rot.end(), r.begin(), it);
        r = cyclically_reduce(FreeWord(rot));
      }
      return r;
    }
    case 2:
      return commutator(u, v);
    case 3:
      return u * v * u * v.inverse() * u.inverse() * v.inverse();
    default:
      throw Error("factor exponent must be 1, 2 or 3");
  }
}

std::vector<FreeWord> relators_from_factor(const MonodromyFactor& f) { return {relator_from_factor(f)}; }

GroupPresentation braid_presentation(const IncidenceComplex& complex) {
  GroupPresentation p;
  p.name = "braid";
  p.n = complex.n();
  p.generators = surface_generators(complex.n());
  for (const auto& f : full_factorization(complex)) p.add_relator(relator_from_factor(f), f.label + " at " + f.source.describe());
  return p;
}

std::vector<FreeWord> conjugate_representatives(int line, int depth) {
  if (depth < 0) throw Error("depth must be non-negative");
  const GeneratorId a = GeneratorId::surface(line, false), b = GeneratorId::surface(line, true);
  const FreeWord ga = FreeWord::of(a), gb = FreeWord::of(b);
  Substitution fwd{{a, ga * gb * ga.inverse()}, {b, ga}};
  Substitution back{{a, gb}, {b, gb.inverse() * ga * gb}};
  std::vector<FreeWord> neg, pos;
  FreeWord w = ga;
  for (int k = 0; k <= depth; ++k) {
    pos.push_back(w);
    w = substitute(w, fwd);
  }
  w = ga;
  for (int k = 1; k <= depth + 1; ++k) {
    w = substitute(w, back);
    neg.push_back(w);
  }
  std::vector<FreeWord> out(neg.rbegin(), neg.rend());
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

FreeWord branch_relator(int i, int j) {
  return gamma(j, true, -1) * gamma(i) * gamma(i, true) * gamma(j) * gamma(i, true, -1) * gamma(i, false, -1);
}

GroupPresentation pres1_presentation(const IncidenceComplex& complex, int depth) {
  GroupPresentation p;
  p.name = "pi1";
  p.n = complex.n();
  p.generators = surface_generators(complex.n());
  std::map<int, std::vector<FreeWord>> reps;
  for (int i = 1; i <= complex.line_count(); ++i) reps[i] = conjugate_representatives(i, depth);

  for (auto [i, j] : complex.incidental_pairs()) {
    for (const auto& a : reps[i]) {
      for (const auto& b : reps[j]) p.add_relator(commutator(a, b), "disjoint " + std::to_string(i) + "," + std::to_string(j));
    }
  }
  for (const auto& tp : complex.three_points()) {
    const int i = tp.vertical_line, j = tp.diagonal_line;
    const std::string where = "V" + std::to_string(tp.index);
    for (const auto& a : reps[i]) {
      for (const auto& b : reps[j]) p.add_relator(a * b * a * b.inverse() * a.inverse() * b.inverse(), "triple " + where);
    }
    p.add_relator(branch_relator(i, j), "branch " + where);
  }
  return p;
}

GroupPresentation quotient_squares(const GroupPresentation& p) {
  GroupPresentation q;
  q.name = p.name + "+squares";
  q.n = p.n;
  q.generators = p.generators;
  std::set<FreeWord> seen;
  std::set<GeneratorId> involutive;
  for (const auto& g : p.generators) {
    if (g.alphabet == Alphabet::Surface) involutive.insert(g);
  }
  auto push = [&](const FreeWord& r, const std::string& origin) {
    if (seen.insert(r).second) q.add_relator(r, origin);
  };
  for (const auto& g : involutive) push(FreeWord::of(g, 2), "square");
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const auto& r = p.relators[i];
    if (r.size() == 2 && r[0] == r[1] && involutive.count(r[0].gen)) continue;
    FreeWord w;
    for (const auto& l : r) {
      Letter x = involutive.count(l.gen) ? Letter{l.gen, 1} : l;
      if (!w.empty() && involutive.count(x.gen) && w.letters().back() == x) {
        std::vector<Letter> ls = w.letters();
        ls.pop_back();
        w = FreeWord(std::move(ls));
      } else {
        w.append_reduced(x);
      }
    }
    if (w.empty()) continue;
    push(w, p.provenance[i]);
  }
  return q;
}

FreeWord projective_relator(int n) {
  FreeWord r;
  for (const auto& g : surface_generators(n)) r.push_back({g, 1});
  return r;
}

GroupPresentation add_projective_relation(const GroupPresentation& p) {
  GroupPresentation q = p;
  q.name = p.name + "+projective";
  q.add_relator(projective_relator(p.n), "projective");
  return q;
}

GroupPresentation pitilde_presentation(int n, int depth, bool projective) {
  GroupPresentation p = quotient_squares(pres1_presentation(build_complex(n), depth));
  p.name = "pitilde";
  if (projective) {
    p = add_projective_relation(p);
    p.name = "pitilde+projective";
  }
  return p;
}

namespace {

// Smallest rotation of w and of w^-1, used as a dedupe key.
FreeWord cyclic_key(const FreeWord& w) {
  FreeWord best;
  bool have = false;
  for (const FreeWord& v : {w, w.inverse()}) {
    const auto& ls = v.letters();
    for (std::size_t s = 0; s < ls.size(); ++s) {
      std::vector<Letter> rot(ls.begin() + static_cast<std::ptrdiff_t>(s), ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(s));
      FreeWord c(std::move(rot));
      if (!have || c < best) {
        best = std::move(c);
        have = true;
      }
    }
  }
  return best;
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& p, const TietzeLimits& limits) {
  GroupPresentation q;
  q.name = p.name;
  q.n = p.n;
  q.generators = p.generators;
  std::vector<FreeWord> rels;
  std::vector<std::string> prov;
  std::set<FreeWord> seen;
  auto load = [&](const std::vector<FreeWord>& rs, const std::vector<std::string>& ps) {
    rels.clear();
    prov.clear();
    seen.clear();
    for (std::size_t i = 0; i < rs.size(); ++i) {
      FreeWord r = cyclically_reduce(rs[i]);
      if (r.empty()) continue;
      if (!seen.insert(cyclic_key(r)).second) continue;
      rels.push_back(std::move(r));
      prov.push_back(ps[i]);
    }
  };
  load(p.relators, p.provenance);

  std::size_t eliminated = 0;
  bool progress = limits.eliminate_generators;
  while (progress && eliminated < limits.max_eliminations) {
    progress = false;
    for (std::size_t ri = 0; ri < rels.size() && !progress; ++ri) {
      const auto& r = rels[ri];
      std::map<GeneratorId, int> count;
      for (const auto& l : r) ++count[l.gen];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        const GeneratorId g = r[pos].gen;
        if (count[g] != 1) continue;
        // r = u g^e v  =>  g = (v u)^-e
        std::vector<Letter> rest(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
        rest.insert(rest.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
        FreeWord value = reduce(FreeWord(rest));
        if (r[pos].exp > 0) value = value.inverse();
        bool fits = true;
        std::vector<FreeWord> next;
        Substitution sub;
        for (const auto& h : q.generators) sub[h] = FreeWord::of(h);
        sub[g] = value;
        for (std::size_t k = 0; k < rels.size() && fits; ++k) {
          if (k == ri) continue;
          FreeWord s = substitute(rels[k], sub);
          if (s.size() > limits.max_relator_length) fits = false;
          next.push_back(std::move(s));
        }
        if (!fits) continue;
        std::vector<std::string> nprov;
        for (std::size_t k = 0; k < prov.size(); ++k) {
          if (k != ri) nprov.push_back(prov[k]);
        }
        load(next, nprov);
        q.generators.erase(std::find(q.generators.begin(), q.generators.end(), g));
        ++eliminated;
        progress = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < rels.size(); ++i) q.add_relator(rels[i], prov[i]);
  return q;
}

}  // namespace galcov
