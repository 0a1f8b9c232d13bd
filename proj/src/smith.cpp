#include "galcov/smith.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace galcov {

BigInt IntegerMatrix::get(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = row.find(c);
  return it == row.end() ? BigInt(0) : it->second;
}

void IntegerMatrix::set(std::size_t r, std::size_t c, const BigInt& v) {
  if (c >= cols_) throw Error("matrix column out of range");
  auto& row = rows_.at(r);
  if (v == 0) {
    row.erase(c);
  } else {
    row[c] = v;
  }
}

void IntegerMatrix::add(std::size_t r, std::size_t c, const BigInt& v) { set(r, c, get(r, c) + v); }

std::size_t IntegerMatrix::append_row() {
  rows_.emplace_back();
  return rows_.size() - 1;
}

std::size_t IntegerMatrix::nonzeros() const {
  std::size_t s = 0;
  for (const auto& r : rows_) s += r.size();
  return s;
}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<long>>& dense) {
  IntegerMatrix m(dense.size(), dense.empty() ? 0 : dense[0].size());
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != m.cols()) throw Error("ragged dense matrix");
    for (std::size_t c = 0; c < dense[r].size(); ++c) m.set(r, c, dense[r][c]);
  }
  return m;
}

std::vector<std::vector<BigInt>> IntegerMatrix::to_dense() const {
  std::vector<std::vector<BigInt>> d(rows(), std::vector<BigInt>(cols_, 0));
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : rows_[r]) d[r][c] = v;
  }
  return d;
}

std::vector<BigInt> SNFResult::torsion() const {
  std::vector<BigInt> t;
  for (const auto& d : invariant_factors) {
    if (d != 1) t.push_back(d);
  }
  return t;
}

std::string SNFResult::describe() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& d : torsion()) {
    out << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (free_rank > 0 || first) out << (first ? "" : " + ") << "Z^" << free_rank;
  return out.str();
}

IntegerMatrix abelianize(const GroupPresentation& p) {
  std::map<GeneratorId, std::size_t> col;
  for (std::size_t i = 0; i < p.generators.size(); ++i) col[p.generators[i]] = i;
  IntegerMatrix m(0, p.generators.size());
  for (const auto& r : p.relators) {
    std::map<std::size_t, long> sums;
    for (const auto& l : r) {
      auto it = col.find(l.gen);
      if (it == col.end()) throw Error("relator uses undeclared generator " + generator_name(l.gen));
      sums[it->second] += l.exp;
    }
    std::size_t row = m.append_row();
    for (auto [c, v] : sums) {
      if (v != 0) m.set(row, c, v);
    }
  }
  return m;
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Sparse elimination state with a column-to-rows index.
class Eliminator {
 public:
  explicit Eliminator(IntegerMatrix&& m) : cols_(m.cols()), col_rows_(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m.row(r).empty()) continue;
      rows_.push_back(m.row(r));
      for (const auto& [c, v] : rows_.back()) col_rows_[c].insert(rows_.size() - 1);
    }
    live_.assign(rows_.size(), true);
  }

  SNFResult run() {
    std::vector<BigInt> diag;
    while (true) {
      auto pivot = choose_pivot();
      if (!pivot) break;
      auto [r, c] = *pivot;
      const BigInt p = rows_[r].at(c);
      bool clean = true;
      std::vector<std::size_t> others(col_rows_[c].begin(), col_rows_[c].end());
      for (std::size_t o : others) {
        if (o == r) continue;
        BigInt q = floor_div(rows_[o].at(c), p);
        axpy(o, r, -q);
        if (rows_[o].count(c)) clean = false;
      }
      if (!clean) continue;
      // Column c now lives only in row r; column operations touch row r alone.
      bool divides = true;
      std::vector<std::pair<std::size_t, BigInt>> updates;
      for (const auto& [cc, v] : rows_[r]) {
        if (cc == c) continue;
        BigInt rem = v - floor_div(v, p) * p;
        if (rem != 0) divides = false;
        updates.emplace_back(cc, rem);
      }
      if (divides) {
        diag.push_back(abs(p));
        drop_row(r);
        continue;
      }
      for (auto& [cc, v] : updates) set(r, cc, v);
    }
    return finish(std::move(diag));
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> choose_pivot() const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    std::size_t best_cost = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!live_[r] || rows_[r].empty()) continue;
      const std::size_t rn = rows_[r].size() - 1;
      for (const auto& [c, v] : rows_[r]) {
        BigInt a = abs(v);
        std::size_t cost = rn * (col_rows_[c].size() - 1);
        if (!best || a < best_abs || (a == best_abs && cost < best_cost)) {
          best = {r, c};
          best_abs = a;
          best_cost = cost;
          if (a == 1 && cost == 0) return best;
        }
      }
    }
    return best;
  }

  void set(std::size_t r, std::size_t c, const BigInt& v) {
    if (v == 0) {
      rows_[r].erase(c);
      col_rows_[c].erase(r);
    } else {
      rows_[r][c] = v;
      col_rows_[c].insert(r);
    }
  }

  // row[dst] += k * row[src]
  void axpy(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (const auto& [c, v] : rows_[src]) {
      auto it = rows_[dst].find(c);
      BigInt nv = (it == rows_[dst].end() ? BigInt(0) : it->second) + k * v;
      set(dst, c, nv);
    }
  }

  void drop_row(std::size_t r) {
    for (const auto& [c, v] : rows_[r]) col_rows_[c].erase(r);
    rows_[r].clear();
    live_[r] = false;
  }

  SNFResult finish(std::vector<BigInt> diag) const {
    for (std::size_t i = 0; i < diag.size(); ++i) {
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        BigInt g = gcd(diag[i], diag[j]);
        BigInt l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
    SNFResult res;
    res.invariant_factors = std::move(diag);
    res.free_rank = cols_ - res.invariant_factors.size();
    return res;
  }

  std::size_t cols_;
  std::vector<IntegerMatrix::Row> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
  std::vector<bool> live_;
};

}  // namespace

SNFResult smith_normal_form(IntegerMatrix m) { return Eliminator(std::move(m)).run(); }

}  // namespace galcov
