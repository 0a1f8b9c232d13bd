// Regenerated braid monodromy on the generic fiber with 4n punctures.
//
// Punctures sit in the order 1 < 1' < 2 < 2' < ... < 2n < 2n', so j is at
// position 2j-1 and j' at 2j. The loop x_p around position p is identified
// with the surface generator of that puncture (Γ_j or Γ_j').

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "galcov/degeneration.hpp"
#include "galcov/permutation.hpp"
#include "galcov/word.hpp"

namespace galcov {

using BraidWord = FreeWord;  // over the Artin alphabet

struct PuncturedFiber {
  int n = 0;

  int size() const { return 4 * n; }
  static int position(int line, bool primed) { return 2 * line - (primed ? 0 : 1); }
  static int line_of(int position) { return (position + 1) / 2; }
  static bool primed_at(int position) { return position % 2 == 0; }
  static GeneratorId loop(int position) { return GeneratorId::surface(line_of(position), primed_at(position)); }
};

enum class Passage { Over, Under };
enum class PathKind { Tilde, Under };

struct TwistPath {
  int start = 0;
  int end = 0;
  std::vector<Passage> passage;  // one entry per position strictly between start and end

  Passage at(int position) const { return passage[static_cast<std::size_t>(position - start - 1)]; }
};

TwistPath make_path(PathKind kind, int i, int j, const IncidenceComplex& complex);

// Conjugator of the half-twist along a path: Over crossings positive.
BraidWord path_conjugator(const TwistPath& path);
BraidWord half_twist(const TwistPath& path, int power);

enum class FactorKind { Node, Cusp, Branch };
std::string kind_name(FactorKind k);

struct Singularity {
  enum class Type { Incidental, ThreePoint } type = Type::Incidental;
  int first = 0;   // incidental: smaller line; 3-point: vertical line
  int second = 0;  // incidental: larger line; 3-point: diagonal line
  int three_point = 0;

  static Singularity incidental(int i, int j);
  static Singularity at_three_point(const IncidenceComplex& c, int k);

  // Ordering key (larger line, smaller line).
  std::pair<int, int> key() const;
  std::string describe() const;
};

// The braid is conjugator · σ_core^exponent · conjugator^-1.
struct MonodromyFactor {
  FactorKind kind = FactorKind::Node;
  BraidWord conjugator;
  int core = 1;
  int exponent = 2;
  Singularity source;
  std::string label;  // e.g. "Z~2 1,4'" or "Z3 11',3'" with twist index

  BraidWord braid() const;
};

std::vector<MonodromyFactor> regenerate(const Singularity& s, const IncidenceComplex& complex);
std::vector<MonodromyFactor> full_factorization(const IncidenceComplex& complex);

// Singularities in canonical order.
std::vector<Singularity> canonical_singularities(const IncidenceComplex& complex);

BraidWord product(const std::vector<MonodromyFactor>& factors);
Permutation braid_permutation(const BraidWord& b, int strands);
BraidWord full_twist(int m);

// Free generators x_p are spelled as PuncturedFiber::loop(p).
// Images of x_1..x_m under the automorphism induced by b, letters applied
// left to right. Throws Error once any image grows past max_letters (0 = no cap).
std::vector<FreeWord> artin_images(const BraidWord& b, int strands, std::size_t max_letters = 0);
FreeWord artin_apply(const BraidWord& b, const FreeWord& w, int strands, std::size_t max_letters = 0);
bool braids_equal(const BraidWord& a, const BraidWord& b, int strands, std::size_t max_letters = 0);

// The same action pushed into Hom(F_m, S_d): a tuple of m permutations is
// mapped to the images of x_1..x_m evaluated at the tuple.
std::vector<Permutation> artin_act_on_tuple(const BraidWord& b, std::vector<Permutation> tuple);

// Compares the ordered factor product with Δ² on 4n strands through the
// action on random tuples in S_degree. A mismatch is a proof of inequality;
// agreement on every tuple is followed by the exact Artin check when it fits
// under max_letters.
struct DeltaSquareReport {
  std::size_t tuples = 0;
  std::size_t mismatched_tuples = 0;
  std::size_t mismatched_entries = 0;
  bool exact_checked = false;
  bool exact_equal = false;
  long product_exponent = 0;
  long twist_exponent = 0;
  bool product_pure = false;
  std::vector<std::string> fingerprint;  // first mismatching tuple: "k: product | twist"

  bool equal() const { return mismatched_tuples == 0 && (!exact_checked || exact_equal); }
  std::string summary() const;
};
DeltaSquareReport delta_square_check(const BraidWord& product, int strands, std::size_t tuples = 16,
                                     int degree = 7, std::uint64_t seed = 1, std::size_t max_letters = 2'000'000);

}  // namespace galcov
