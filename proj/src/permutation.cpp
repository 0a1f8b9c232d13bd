#include "galcov/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "galcov/word.hpp"

namespace galcov {

Permutation::Permutation(std::size_t degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), std::uint16_t{0});
}

Permutation Permutation::from_images(std::span<const int> one_based_images) {
  Permutation p(one_based_images.size());
  std::vector<bool> seen(one_based_images.size(), false);
  for (std::size_t i = 0; i < one_based_images.size(); ++i) {
    int v = one_based_images[i];
    if (v < 1 || static_cast<std::size_t>(v) > one_based_images.size() || seen[v - 1]) {
      throw Error("permutation images are not a bijection");
    }
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint16_t>(v - 1);
  }
  return p;
}

Permutation Permutation::transposition(std::size_t degree, int a, int b) {
  Permutation p(degree);
  if (a < 1 || b < 1 || static_cast<std::size_t>(a) > degree || static_cast<std::size_t>(b) > degree) {
    throw Error("transposition point out of range");
  }
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::from_cycle(std::size_t degree, std::span<const int> cycle) {
  Permutation p(degree);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    p.img_[cycle[i] - 1] = static_cast<std::uint16_t>(cycle[(i + 1) % cycle.size()] - 1);
  }
  std::vector<int> check(p.img_.begin(), p.img_.end());
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != static_cast<int>(i)) throw Error("cycle repeats a point");
  }
  return p;
}

int Permutation::preimage(int point) const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] + 1 == point) return static_cast<int>(i) + 1;
  }
  throw Error("point outside permutation degree");
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw Error("permutation degree mismatch");
  Permutation r(degree());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = rhs.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint16_t>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

std::string Permutation::cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < img_.size(); ++start) {
    if (seen[start] || img_[start] == start) continue;
    any = true;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out << ' ';
      out << x + 1;
      first = false;
      x = img_[x];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::vector<int> Permutation::images() const {
  std::vector<int> r(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r[i] = img_[i] + 1;
  return r;
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= i;
  return r;
}

std::uint64_t Permutation::rank() const {
  std::uint64_t r = 0;
  const std::size_t d = img_.size();
  for (std::size_t i = 0; i < d; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < d; ++j) {
      if (img_[j] < img_[i]) ++smaller;
    }
    r += smaller * factorial(d - 1 - i);
  }
  return r;
}

Permutation Permutation::unrank(std::size_t degree, std::uint64_t rank) {
  if (rank >= factorial(degree)) throw Error("permutation rank out of range");
  std::vector<std::uint16_t> pool(degree);
  std::iota(pool.begin(), pool.end(), std::uint16_t{0});
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    std::uint64_t f = factorial(degree - 1 - i);
    std::size_t k = static_cast<std::size_t>(rank / f);
    rank %= f;
    p.img_[i] = pool[k];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return p;
}

std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<int> imgs(degree);
  std::iota(imgs.begin(), imgs.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(degree));
  do {
    out.push_back(Permutation::from_images(imgs));
  } while (std::next_permutation(imgs.begin(), imgs.end()));
  return out;
}

}  // namespace galcov
