#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace galcov {

// Permutation of {1..degree}. Products compose left to right, matching the
// order in which letters of a word are read: (p * q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  static Permutation from_images(std::span<const int> one_based_images);
  static Permutation transposition(std::size_t degree, int a, int b);
  static Permutation from_cycle(std::size_t degree, std::span<const int> cycle);

  std::size_t degree() const { return img_.size(); }
  int operator()(int point) const { return img_[static_cast<std::size_t>(point - 1)] + 1; }
  int preimage(int point) const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  // Cycle notation, "()" for the identity.
  std::string cycles() const;
  std::vector<int> images() const;

  // Lexicographic rank among all permutations of the same degree.
  std::uint64_t rank() const;
  static Permutation unrank(std::size_t degree, std::uint64_t rank);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> img_;  // zero based
};

std::uint64_t factorial(std::size_t k);

// All permutations of the given degree in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t degree);

}  // namespace galcov
