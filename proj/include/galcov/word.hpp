// Free-group words over named generators.
//
// Three alphabets coexist in the pipeline: the surface generators Γ_j, Γ_j'
// (which double as the puncture loops x_1..x_4n of the generic fiber), the
// Artin generators σ_i, and the kernel symbols produced by Reidemeister-
// Schreier rewriting. A GeneratorId carries its alphabet so that words over
// different alphabets never compare equal by accident.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace galcov {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Alphabet : std::uint8_t { Surface = 0, Artin = 1, Kernel = 2 };

struct GeneratorId {
  Alphabet alphabet = Alphabet::Surface;
  std::uint64_t index = 0;
  bool primed = false;

  auto operator<=>(const GeneratorId&) const = default;

  static constexpr GeneratorId surface(int line, bool primed) {
    return {Alphabet::Surface, static_cast<std::uint64_t>(line), primed};
  }
  static constexpr GeneratorId artin(int i) {
    return {Alphabet::Artin, static_cast<std::uint64_t>(i), false};
  }
};

struct GeneratorIdHash {
  std::size_t operator()(const GeneratorId& g) const noexcept {
    return std::hash<std::uint64_t>{}(g.index * 8 + static_cast<std::uint64_t>(g.alphabet) * 2 +
                                      (g.primed ? 1 : 0));
  }
};

struct Letter {
  GeneratorId gen;
  int exp = 1;  // +1 or -1

  auto operator<=>(const Letter&) const = default;
  Letter inverse() const { return {gen, -exp}; }
};

class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(std::initializer_list<Letter> letters);
  explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static FreeWord of(GeneratorId g, int exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  // Appends with free cancellation against the current tail.
  void append_reduced(Letter l);
  void append_reduced(const FreeWord& w);

  FreeWord inverse() const;
  FreeWord power(int e) const;
  bool is_reduced() const;

  // Concatenation followed by free reduction.
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  auto operator<=>(const FreeWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

FreeWord reduce(const FreeWord& w);

// Removes cancelling pairs across the ends as well.
FreeWord cyclically_reduce(const FreeWord& w);

// reduce(by * w * by^-1)
FreeWord conjugate(const FreeWord& w, const FreeWord& by);

FreeWord commutator(const FreeWord& a, const FreeWord& b);

using Substitution = std::map<GeneratorId, FreeWord>;

// Homomorphic image; throws Error naming the first generator without an image.
FreeWord substitute(const FreeWord& w, const Substitution& images);

// Signed count of g, or total signed length when g is empty.
long exponent_sum(const FreeWord& w, std::optional<GeneratorId> g = std::nullopt);

// Token spelling: g3, g3p (primed), s4 (Artin), kernel symbols per kernel.hpp.
std::string generator_name(GeneratorId g);
GeneratorId parse_generator_name(std::string_view token);

// Space separated tokens, `^-1` marks inversion; the empty word is written `1`.
std::string to_string(const FreeWord& w);
FreeWord parse_word(std::string_view text);

}  // namespace galcov
