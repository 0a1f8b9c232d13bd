#include "galcov/coset_enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace galcov {

std::string strategy_name(Strategy s) { return s == Strategy::HLT ? "hlt" : "felsch"; }

namespace {

using Coset = std::int32_t;
using Col = int;

struct BudgetExceeded {};

class Enumerator {
 public:
  Enumerator(std::size_t cols, std::vector<Col> inverse, std::uint64_t capacity)
      : cols_(cols), inv_(std::move(inverse)), capacity_(std::max<std::uint64_t>(capacity, 1)) {
    grow(1024);
    top_ = 1;
    live_ = defined_ = max_live_ = 1;
  }

  void set_relators(std::vector<std::vector<Col>> rels) {
    rels_ = std::move(rels);
    cycles_.assign(cols_, {});
    for (const auto& r : rels_) {
      std::set<std::vector<Col>> seen;
      for (const auto& base : {r, inverse_word(r)}) {
        for (std::size_t s = 0; s < base.size(); ++s) {
          std::vector<Col> c(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
          c.insert(c.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
          if (seen.insert(c).second) cycles_[static_cast<std::size_t>(c[0])].push_back(c);
        }
      }
    }
  }

  void run_hlt(const std::vector<std::vector<Col>>& subgroup) {
    for (const auto& w : subgroup) scan_and_fill(1, w);
    next_ = 1;
    while (true) {
      while (next_ <= top_ && !alive(next_)) ++next_;
      if (next_ > top_) break;
      current_ = next_++;
      for (const auto& r : rels_) {
        scan_and_fill(current_, r);
        if (current_ == 0 || !alive(current_)) break;
      }
      for (std::size_t x = 0; x < cols_; ++x) {
        if (current_ == 0 || !alive(current_)) break;
        if (at(current_, x) == 0) define(current_, static_cast<Col>(x));
      }
    }
  }

  void run_felsch(const std::vector<std::vector<Col>>& subgroup) {
    for (const auto& w : subgroup) {
      scan_and_fill(1, w);
      process_deductions();
    }
    next_ = 1;
    while (true) {
      process_deductions();
      while (next_ <= top_ && (!alive(next_) || row_full(next_))) ++next_;
      if (next_ > top_) break;
      for (std::size_t x = 0; x < cols_; ++x) {
        if (at(next_, x) == 0) {
          define(next_, static_cast<Col>(x));
          break;
        }
      }
    }
  }

  std::uint64_t live() const { return live_; }
  std::uint64_t defined() const { return defined_; }
  std::uint64_t max_live() const { return max_live_; }

  // Live cosets renumbered 1..live, rows stored 0-based.
  std::vector<Coset> compacted() {
    compact();
    std::vector<Coset> out(static_cast<std::size_t>(live_) * cols_);
    for (Coset c = 1; c <= top_; ++c) {
      for (std::size_t x = 0; x < cols_; ++x) out[static_cast<std::size_t>(c - 1) * cols_ + x] = at(c, x);
    }
    return out;
  }

 private:
  std::vector<Col> inverse_word(const std::vector<Col>& w) const {
    std::vector<Col> r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(inv_[static_cast<std::size_t>(*it)]);
    return r;
  }

  Coset& at(Coset c, std::size_t x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  bool alive(Coset c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  bool row_full(Coset c) {
    for (std::size_t x = 0; x < cols_; ++x) {
      if (at(c, x) == 0) return false;
    }
    return true;
  }

  void grow(std::uint64_t rows) {
    rows = std::min<std::uint64_t>(rows, capacity_ + 1);
    table_.resize(static_cast<std::size_t>(rows + 1) * cols_, 0);
    const std::size_t old = parent_.size();
    parent_.resize(static_cast<std::size_t>(rows + 1));
    for (std::size_t i = old; i < parent_.size(); ++i) parent_[i] = static_cast<Coset>(i);
  }

  Coset new_coset() {
    if (static_cast<std::uint64_t>(top_) >= capacity_) {
      compact();
      if (static_cast<std::uint64_t>(top_) >= capacity_) throw BudgetExceeded{};
    }
    ++top_;
    if (static_cast<std::size_t>(top_) >= parent_.size()) grow(std::max<std::uint64_t>(parent_.size() * 2, 1024));
    const Coset c = top_;
    parent_[static_cast<std::size_t>(c)] = c;
    std::fill_n(table_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(c) * cols_), cols_, 0);
    ++live_;
    ++defined_;
    max_live_ = std::max(max_live_, live_);
    return c;
  }

  // a must be alive; returns the (possibly renumbered) a.
  Coset define(Coset a, Col x) {
    const auto epoch = epoch_;
    const Coset b = new_coset();
    if (epoch != epoch_) a = nxt_[static_cast<std::size_t>(a)];
    at(a, static_cast<std::size_t>(x)) = b;
    at(b, static_cast<std::size_t>(inv_[static_cast<std::size_t>(x)])) = a;
    deductions_.emplace_back(a, x);
    return a;
  }

  // Drop dead cosets. nxt_[c] is the new number of the first live coset >= c.
  void compact() {
    nxt_.assign(static_cast<std::size_t>(top_) + 2, 0);
    Coset count = 0;
    for (Coset c = 1; c <= top_; ++c) {
      if (alive(c)) ++count;
    }
    if (count == top_) return;
    Coset following = count + 1;
    nxt_[static_cast<std::size_t>(top_) + 1] = following;
    for (Coset c = top_; c >= 1; --c) {
      if (alive(c)) --following;
      nxt_[static_cast<std::size_t>(c)] = following;
    }
    for (Coset c = 1; c <= top_; ++c) {
      if (!alive(c)) continue;
      const Coset nc = nxt_[static_cast<std::size_t>(c)];
      for (std::size_t x = 0; x < cols_; ++x) {
        const Coset v = at(c, x);
        at(nc, x) = v == 0 ? 0 : nxt_[static_cast<std::size_t>(v)];
      }
    }
    std::vector<std::pair<Coset, Col>> keep;
    for (auto [c, x] : deductions_) {
      if (alive(c)) keep.emplace_back(nxt_[static_cast<std::size_t>(c)], x);
    }
    deductions_ = std::move(keep);
    if (current_ != 0) current_ = alive(current_) ? nxt_[static_cast<std::size_t>(current_)] : 0;
    next_ = nxt_[static_cast<std::size_t>(std::min<Coset>(next_, top_ + 1))];
    for (Coset c = 1; c <= top_; ++c) {
      parent_[static_cast<std::size_t>(c)] = c;
      if (c > count) std::fill_n(table_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(c) * cols_), cols_, 0);
    }
    top_ = count;
    ++epoch_;
  }

  Coset rep(Coset c) {
    Coset r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      Coset nx = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = nx;
    }
    return r;
  }

  void merge(Coset k, Coset l) {
    Coset a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue_.push_back(b);
  }

  void coincidence(Coset a, Coset b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const Coset g = queue_[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        const Coset d = at(g, x);
        if (d == 0) continue;
        const auto ix = static_cast<std::size_t>(inv_[x]);
        if (at(d, ix) == g) at(d, ix) = 0;
        const Coset mu = rep(g), nu = rep(d);
        if (at(mu, x) != 0) {
          merge(nu, at(mu, x));
        } else if (at(nu, ix) != 0) {
          merge(mu, at(nu, ix));
        } else {
          at(mu, x) = nu;
          at(nu, ix) = mu;
          deductions_.emplace_back(mu, static_cast<Col>(x));
        }
      }
    }
    queue_.clear();
  }

  Col inv(Col x) const { return inv_[static_cast<std::size_t>(x)]; }

  void scan_and_fill(Coset a, const std::vector<Col>& w) {
    if (w.empty()) return;
    Coset f = a, b = a;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i, j)
    while (true) {
      while (i < j && at(f, static_cast<std::size_t>(w[i])) != 0) f = at(f, static_cast<std::size_t>(w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, static_cast<std::size_t>(inv(w[j - 1]))) != 0) b = at(b, static_cast<std::size_t>(inv(w[--j])));
      if (i == j) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, static_cast<std::size_t>(w[i])) = b;
        at(b, static_cast<std::size_t>(inv(w[i]))) = f;
        deductions_.emplace_back(f, w[i]);
        return;
      }
      const auto epoch = epoch_;
      f = define(f, w[i]);
      if (epoch != epoch_) b = nxt_[static_cast<std::size_t>(b)];
    }
  }

  void scan(Coset a, const std::vector<Col>& w) {
    Coset f = a, b = a;
    std::size_t i = 0, j = w.size();
    while (i < j) {
      const Coset nf = at(f, static_cast<std::size_t>(w[i]));
      if (nf == 0) break;
      f = nf;
      ++i;
    }
    if (i == j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j > i) {
      const Coset nb = at(b, static_cast<std::size_t>(inv(w[j - 1])));
      if (nb == 0) break;
      b = nb;
      --j;
    }
    if (i == j) {
      coincidence(f, b);
    } else if (j == i + 1) {
      at(f, static_cast<std::size_t>(w[i])) = b;
      at(b, static_cast<std::size_t>(inv(w[i]))) = f;
      deductions_.emplace_back(f, w[i]);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      const Coset d = at(c, static_cast<std::size_t>(x));
      for (const auto& cyc : cycles_[static_cast<std::size_t>(x)]) {
        if (!alive(c)) break;
        scan(c, cyc);
      }
      if (d == 0 || !alive(d)) continue;
      for (const auto& cyc : cycles_[static_cast<std::size_t>(inv(x))]) {
        if (!alive(d)) break;
        scan(d, cyc);
      }
    }
  }

  std::size_t cols_;
  std::vector<Col> inv_;
  std::uint64_t capacity_;
  std::vector<Coset> table_;
  std::vector<Coset> parent_;
  std::vector<std::vector<Col>> rels_;
  std::vector<std::vector<std::vector<Col>>> cycles_;
  std::vector<Coset> queue_;
  std::vector<std::pair<Coset, Col>> deductions_;
  std::vector<Coset> nxt_;
  std::uint64_t epoch_ = 0;
  Coset top_ = 0;
  Coset next_ = 1;
  Coset current_ = 0;
  std::uint64_t live_ = 0, defined_ = 0, max_live_ = 0;
};

}  // namespace

std::int64_t CosetTable::trace(std::int64_t coset, const FreeWord& w) const {
  if (!complete()) throw Error("trace needs a complete coset table");
  std::map<GeneratorId, std::size_t> idx;
  for (std::size_t i = 0; i < generators.size(); ++i) idx[generators[i]] = i;
  for (const auto& l : w) {
    auto it = idx.find(l.gen);
    if (it == idx.end()) throw Error("generator " + generator_name(l.gen) + " not in coset table");
    const int col = column_of[2 * it->second + (l.exp < 0 ? 1 : 0)];
    coset = table[static_cast<std::size_t>(coset - 1) * columns + static_cast<std::size_t>(col)];
  }
  return coset;
}

bool CosetTable::verify(const GroupPresentation& p) const {
  if (!complete()) return false;
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (table[c] < 1 || static_cast<std::uint64_t>(table[c]) > index) return false;
  }
  for (std::uint64_t c = 1; c <= index; ++c) {
    for (std::size_t x = 0; x < columns; ++x) {
      auto d = table[static_cast<std::size_t>(c - 1) * columns + x];
      if (table[static_cast<std::size_t>(d - 1) * columns + static_cast<std::size_t>(inverse_column[x])] != static_cast<std::int32_t>(c)) {
        return false;
      }
    }
    for (const auto& r : p.relators) {
      if (trace(static_cast<std::int64_t>(c), r) != static_cast<std::int64_t>(c)) return false;
    }
  }
  return true;
}

CosetTable todd_coxeter(const GroupPresentation& p, const std::vector<FreeWord>& subgroup_gens,
                        const EnumerationOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  CosetTable out;
  out.generators = p.generators;
  std::map<GeneratorId, std::size_t> idx;
  for (std::size_t i = 0; i < p.generators.size(); ++i) idx[p.generators[i]] = i;

  std::set<std::size_t> involutory;
  if (opt.involution_columns) {
    for (const auto& r0 : p.relators) {
      FreeWord r = cyclically_reduce(r0);
      if (r.size() == 2 && r[0] == r[1]) involutory.insert(idx.at(r[0].gen));
    }
  }
  out.column_of.assign(2 * p.generators.size(), 0);
  std::vector<Col> inverse;
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    const Col c = static_cast<Col>(inverse.size());
    if (involutory.count(g)) {
      out.column_of[2 * g] = out.column_of[2 * g + 1] = c;
      inverse.push_back(c);
    } else {
      out.column_of[2 * g] = c;
      out.column_of[2 * g + 1] = c + 1;
      inverse.push_back(c + 1);
      inverse.push_back(c);
    }
  }
  out.columns = inverse.size();
  out.inverse_column = inverse;

  auto to_cols = [&](const FreeWord& w0) {
    FreeWord w = cyclically_reduce(w0);
    std::vector<Col> cols;
    for (const auto& l : w) {
      auto it = idx.find(l.gen);
      if (it == idx.end()) throw Error("word uses generator " + generator_name(l.gen) + " outside the presentation");
      const Col c = out.column_of[2 * it->second + (l.exp < 0 ? 1 : 0)];
      if (!cols.empty() && inverse[static_cast<std::size_t>(cols.back())] == c) {
        cols.pop_back();
      } else {
        cols.push_back(c);
      }
    }
    while (cols.size() >= 2 && inverse[static_cast<std::size_t>(cols.front())] == cols.back()) {
      cols.erase(cols.begin());
      cols.pop_back();
    }
    return cols;
  };

  std::vector<std::vector<Col>> rels;
  std::set<std::vector<Col>> seen;
  for (const auto& r : p.relators) {
    auto c = to_cols(r);
    if (c.empty() || !seen.insert(c).second) continue;
    rels.push_back(std::move(c));
  }
  if (opt.reverse_relators) std::reverse(rels.begin(), rels.end());
  std::vector<std::vector<Col>> sub;
  for (const auto& w : subgroup_gens) {
    // subgroup words are traced, not cyclically reduced
    std::vector<Col> c;
    for (const auto& l : reduce(w)) c.push_back(out.column_of[2 * idx.at(l.gen) + (l.exp < 0 ? 1 : 0)]);
    if (!c.empty()) sub.push_back(std::move(c));
  }

  Enumerator e(out.columns, inverse, opt.max_cosets);
  e.set_relators(rels);
  try {
    if (opt.strategy == Strategy::HLT) {
      e.run_hlt(sub);
    } else {
      e.run_felsch(sub);
    }
    out.status = CosetTable::Status::Complete;
  } catch (const BudgetExceeded&) {
    out.status = CosetTable::Status::BudgetExceeded;
  }
  out.index = e.live();
  out.total_defined = e.defined();
  out.max_live = e.max_live();
  if (out.complete()) out.table = e.compacted();
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace galcov
