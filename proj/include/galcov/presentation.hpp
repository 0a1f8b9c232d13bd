// Finitely presented groups over surface or kernel generators.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "galcov/braid.hpp"
#include "galcov/degeneration.hpp"
#include "galcov/word.hpp"

namespace galcov {

struct GroupPresentation {
  std::string name;
  int n = 0;
  std::vector<GeneratorId> generators;
  std::vector<FreeWord> relators;
  std::vector<std::string> provenance;  // parallel to relators

  void add_relator(const FreeWord& r, std::string origin);
  bool has_generator(GeneratorId g) const;
  // Throws Error if a relator uses an undeclared generator.
  void validate() const;
  std::size_t total_length() const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

// Γ_1, Γ_1', ..., Γ_2n, Γ_2n'
std::vector<GeneratorId> surface_generators(int n);
FreeWord gamma(int line, bool primed = false, int exp = 1);

// One relator per factor, in transported loops: branch identifies the two
// endpoint loops, node gives a commutator, cusp a triple relation.
FreeWord relator_from_factor(const MonodromyFactor& f);
std::vector<FreeWord> relators_from_factor(const MonodromyFactor& f);

// van Kampen presentation read off the full factorization.
GroupPresentation braid_presentation(const IncidenceComplex& complex);

// Conjugate representatives of Γ_(i) at the given depth: images of Γ_i under
// Z^k, k = -(depth+1)..depth, with Z: Γ_i -> Γ_i Γ_i' Γ_i^-1, Γ_i' -> Γ_i.
std::vector<FreeWord> conjugate_representatives(int line, int depth);

FreeWord branch_relator(int vertical, int diagonal);

GroupPresentation pres1_presentation(const IncidenceComplex& complex, int depth = 0);
GroupPresentation quotient_squares(const GroupPresentation& p);
GroupPresentation add_projective_relation(const GroupPresentation& p);
FreeWord projective_relator(int n);

// Π̃₁, optionally with the projective relation.
GroupPresentation pitilde_presentation(int n, int depth = 0, bool projective = false);

struct TietzeLimits {
  std::size_t max_eliminations = 1000;
  std::size_t max_relator_length = 200;
  bool eliminate_generators = true;
};

GroupPresentation tietze_simplify(const GroupPresentation& p, const TietzeLimits& limits = {});

// Presentation file format: a `generators:` line, then one relator per line.
// `#` lines directly above a relator hold its provenance; `#@` lines carry
// name and n.
void write_presentation(const GroupPresentation& p, std::ostream& out);
std::string write_presentation(const GroupPresentation& p);
GroupPresentation parse_presentation(std::istream& in);
GroupPresentation parse_presentation_text(const std::string& text);

}  // namespace galcov
