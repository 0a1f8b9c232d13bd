// Abelianization matrices and their Smith normal form over exact integers.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "galcov/presentation.hpp"

namespace galcov {

using BigInt = boost::multiprecision::cpp_int;

class IntegerMatrix {
 public:
  using Row = std::map<std::size_t, BigInt>;  // column -> nonzero entry

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  BigInt get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const BigInt& v);
  void add(std::size_t r, std::size_t c, const BigInt& v);
  const Row& row(std::size_t r) const { return rows_.at(r); }
  std::size_t append_row();
  std::size_t nonzeros() const;

  static IntegerMatrix from_dense(const std::vector<std::vector<long>>& dense);
  std::vector<std::vector<BigInt>> to_dense() const;

 private:
  std::vector<Row> rows_;
  std::size_t cols_ = 0;
};

struct SNFResult {
  std::vector<BigInt> invariant_factors;  // nonzero, d1 | d2 | ...
  std::size_t free_rank = 0;

  // Factors other than 1.
  std::vector<BigInt> torsion() const;
  std::string describe() const;  // e.g. "Z^6" or "Z/2 + Z^3"
};

// One row per relator, one column per generator.
IntegerMatrix abelianize(const GroupPresentation& p);

SNFResult smith_normal_form(IntegerMatrix m);

}  // namespace galcov
