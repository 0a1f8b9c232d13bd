#include "galcov/braid.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace galcov {

namespace {

using Sym = int;  // ±position, compact letters for the Artin action
using SymWord = std::vector<Sym>;

void push_reduced(SymWord& w, Sym s) {
  if (!w.empty() && w.back() == -s) {
    w.pop_back();
  } else {
    w.push_back(s);
  }
}

void append(SymWord& out, const SymWord& w, bool inverted) {
  if (!inverted) {
    for (Sym s : w) push_reduced(out, s);
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) push_reduced(out, -*it);
  }
}

int artin_index(const Letter& l, int strands) {
  if (l.gen.alphabet != Alphabet::Artin) throw Error("braid word contains non-Artin generator " + generator_name(l.gen));
  auto i = static_cast<int>(l.gen.index);
  if (i < 1 || i >= strands) throw Error("Artin generator s" + std::to_string(i) + " outside " + std::to_string(strands) + " strands");
  return i;
}

std::vector<SymWord> sym_images(const BraidWord& b, int strands, std::size_t max_letters) {
  std::vector<SymWord> img(static_cast<std::size_t>(strands) + 1);
  for (int p = 1; p <= strands; ++p) img[static_cast<std::size_t>(p)] = {p};
  const auto& ls = b.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const auto i = static_cast<std::size_t>(artin_index(*it, strands));
    SymWord xi = std::move(img[i]);
    SymWord xj = std::move(img[i + 1]);
    SymWord a;
    if (it->exp > 0) {
      append(a, xi, false);
      append(a, xj, false);
      append(a, xi, true);
      img[i] = std::move(a);
      img[i + 1] = std::move(xi);
    } else {
      append(a, xj, true);
      append(a, xi, false);
      append(a, xj, false);
      img[i] = std::move(xj);
      img[i + 1] = std::move(a);
    }
    if (max_letters != 0 && std::max(img[i].size(), img[i + 1].size()) > max_letters) {
      throw Error("Artin image exceeded " + std::to_string(max_letters) + " letters");
    }
  }
  return img;
}

FreeWord to_free(const SymWord& w) {
  FreeWord out;
  for (Sym s : w) out.push_back({PuncturedFiber::loop(std::abs(s)), s > 0 ? 1 : -1});
  return out;
}

BraidWord sigma(int i, int exp) { return FreeWord::of(GeneratorId::artin(i), exp); }

std::string puncture_name(int line, bool primed) { return std::to_string(line) + (primed ? "'" : ""); }

}  // namespace

TwistPath make_path(PathKind kind, int i, int j, const IncidenceComplex& complex) {
  if (i >= j) throw Error("path endpoints must satisfy start < end");
  if (i < 1 || j > 2 * complex.line_count()) throw Error("path endpoint outside the fiber");
  TwistPath path{i, j, {}};
  const int start_line = PuncturedFiber::line_of(i);
  const int end_vertex = complex.line(PuncturedFiber::line_of(j)).endpoints.second;
  for (int c = i + 1; c < j; ++c) {
    const int line = PuncturedFiber::line_of(c);
    bool under = kind == PathKind::Under ||
                 (line != start_line && complex.line(line).endpoints.second == end_vertex);
    path.passage.push_back(under ? Passage::Under : Passage::Over);
  }
  return path;
}

BraidWord path_conjugator(const TwistPath& path) {
  BraidWord c;
  for (int p = path.start + 1; p < path.end; ++p) c.push_back({GeneratorId::artin(p - 1), path.at(p) == Passage::Over ? 1 : -1});
  return c;
}

BraidWord half_twist(const TwistPath& path, int power) {
  if (power < 1 || power > 3) throw Error("half-twist power must be 1, 2 or 3");
  BraidWord c = path_conjugator(path);
  return c * sigma(path.end - 1, power) * c.inverse();
}

std::string kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::Node: return "node";
    case FactorKind::Cusp: return "cusp";
    case FactorKind::Branch: return "branch";
  }
  return "?";
}

Singularity Singularity::incidental(int i, int j) {
  Singularity s;
  s.type = Type::Incidental;
  s.first = std::min(i, j);
  s.second = std::max(i, j);
  return s;
}

Singularity Singularity::at_three_point(const IncidenceComplex& c, int k) {
  Singularity s;
  s.type = Type::ThreePoint;
  auto [v, d] = three_point_lines(c, k);
  s.first = v;
  s.second = d;
  s.three_point = k;
  return s;
}

std::pair<int, int> Singularity::key() const { return {std::max(first, second), std::min(first, second)}; }

std::string Singularity::describe() const {
  if (type == Type::Incidental) return "incidental " + std::to_string(first) + "," + std::to_string(second);
  return "V" + std::to_string(three_point) + " (vertical " + std::to_string(first) + ", diagonal " +
         std::to_string(second) + ")";
}

BraidWord MonodromyFactor::braid() const { return conjugator * sigma(core, exponent) * conjugator.inverse(); }

std::vector<MonodromyFactor> regenerate(const Singularity& s, const IncidenceComplex& complex) {
  std::vector<MonodromyFactor> out;
  const int m = 2 * complex.line_count();
  auto pos = [](int line, bool primed) { return PuncturedFiber::position(line, primed); };

  if (s.type == Singularity::Type::Incidental) {
    if (!complex.lines_disjoint(s.first, s.second)) throw Error("lines " + s.describe() + " are not incidental");
    const int i = s.first, j = s.second;
    for (bool ip : {false, true}) {
      for (bool jp : {false, true}) {
        TwistPath path = make_path(PathKind::Tilde, pos(i, ip), pos(j, jp), complex);
        out.push_back({FactorKind::Node, path_conjugator(path), path.end - 1, 2, s,
                       "Z~2 " + puncture_name(i, ip) + "," + puncture_name(j, jp)});
      }
    }
    return out;
  }

  if (s.three_point < 1 || s.three_point > complex.line_count()) throw Error("unknown 3-point in " + s.describe());
  const int i = s.first, j = s.second;
  const int a = std::min(pos(i, true), pos(j, true)), b = std::max(pos(i, true), pos(j, true));
  TwistPath under = make_path(PathKind::Under, a, b, complex);
  for (int nu : {-1, 0, 1}) {
    BraidWord c;
    if (nu != 0) c.push_back({GeneratorId::artin(pos(i, false)), nu});
    c = c * path_conjugator(under);
    out.push_back({FactorKind::Cusp, c, b - 1, 3, s,
                   "Z3 " + std::to_string(i) + std::to_string(i) + "'," + std::to_string(j) + "' twist " + std::to_string(nu)});
  }

  // Branch point: half-twist on (j, j') along a loop encircling i, i'.
  const int q = pos(j, false), p = pos(i, false);
  BraidWord lead, loop;
  if (i < j) {
    for (int k = q - 1; k >= p + 2; --k) lead.push_back({GeneratorId::artin(k), 1});
    loop = {{GeneratorId::artin(p + 1), 1}, {GeneratorId::artin(p), 1}, {GeneratorId::artin(p), 1}, {GeneratorId::artin(p + 1), 1}};
  } else {
    for (int k = q + 1; k <= p - 2; ++k) lead.push_back({GeneratorId::artin(k), -1});
    loop = {{GeneratorId::artin(p - 1), -1}, {GeneratorId::artin(p), -1}, {GeneratorId::artin(p), -1}, {GeneratorId::artin(p - 1), -1}};
  }
  BraidWord cinv = lead * loop * lead.inverse();
  if (q >= m) throw Error("branch point outside the fiber");
  out.push_back({FactorKind::Branch, cinv.inverse(), q, 1, s,
                 "Z " + std::to_string(j) + std::to_string(j) + "'(" + std::to_string(i) + ")"});
  return out;
}

std::vector<Singularity> canonical_singularities(const IncidenceComplex& complex) {
  std::vector<Singularity> out;
  for (auto [i, j] : complex.incidental_pairs()) out.push_back(Singularity::incidental(i, j));
  for (const auto& tp : complex.three_points()) out.push_back(Singularity::at_three_point(complex, tp.index));
  std::stable_sort(out.begin(), out.end(), [](const Singularity& x, const Singularity& y) { return x.key() < y.key(); });
  return out;
}

std::vector<MonodromyFactor> full_factorization(const IncidenceComplex& complex) {
  std::vector<MonodromyFactor> out;
  for (const auto& s : canonical_singularities(complex)) {
    auto fs = regenerate(s, complex);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

BraidWord product(const std::vector<MonodromyFactor>& factors) {
  BraidWord b;
  for (const auto& f : factors) b.append_reduced(f.braid());
  return b;
}

Permutation braid_permutation(const BraidWord& b, int strands) {
  Permutation p(static_cast<std::size_t>(strands));
  for (const auto& l : b) {
    const int i = artin_index(l, strands);
    p = p * Permutation::transposition(static_cast<std::size_t>(strands), i, i + 1);
  }
  return p;
}

BraidWord full_twist(int m) {
  if (m < 2) throw Error("full twist needs at least 2 strands");
  BraidWord b;
  for (int r = 0; r < m; ++r) {
    for (int i = 1; i < m; ++i) b.push_back({GeneratorId::artin(i), 1});
  }
  return b;
}

std::vector<FreeWord> artin_images(const BraidWord& b, int strands, std::size_t max_letters) {
  auto img = sym_images(b, strands, max_letters);
  std::vector<FreeWord> out;
  for (int p = 1; p <= strands; ++p) out.push_back(to_free(img[static_cast<std::size_t>(p)]));
  return out;
}

FreeWord artin_apply(const BraidWord& b, const FreeWord& w, int strands, std::size_t max_letters) {
  auto img = sym_images(b, strands, max_letters);
  SymWord out;
  for (const auto& l : w) {
    if (l.gen.alphabet != Alphabet::Surface) throw Error("artin_apply expects puncture loops, got " + generator_name(l.gen));
    const int p = PuncturedFiber::position(static_cast<int>(l.gen.index), l.gen.primed);
    if (p > strands) throw Error("loop " + generator_name(l.gen) + " outside " + std::to_string(strands) + " strands");
    append(out, img[static_cast<std::size_t>(p)], l.exp < 0);
  }
  return to_free(out);
}

bool braids_equal(const BraidWord& a, const BraidWord& b, int strands, std::size_t max_letters) {
  return sym_images(a, strands, max_letters) == sym_images(b, strands, max_letters);
}

std::vector<Permutation> artin_act_on_tuple(const BraidWord& b, std::vector<Permutation> tuple) {
  const int strands = static_cast<int>(tuple.size());
  const auto& ls = b.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const auto i = static_cast<std::size_t>(artin_index(*it, strands)) - 1;
    Permutation xi = tuple[i], xj = tuple[i + 1];
    if (it->exp > 0) {
      tuple[i] = xi * xj * xi.inverse();
      tuple[i + 1] = xi;
    } else {
      tuple[i] = xj;
      tuple[i + 1] = xj.inverse() * xi * xj;
    }
  }
  return tuple;
}

std::string DeltaSquareReport::summary() const {
  std::ostringstream out;
  out << "exponents " << product_exponent << "/" << twist_exponent << ", pure " << (product_pure ? "yes" : "no")
      << ", tuples " << tuples - mismatched_tuples << "/" << tuples << " agree";
  if (exact_checked) out << ", exact " << (exact_equal ? "equal" : "different");
  if (!fingerprint.empty()) {
    out << ", first mismatch";
    for (const auto& f : fingerprint) out << " [" << f << "]";
  }
  return out.str();
}

DeltaSquareReport delta_square_check(const BraidWord& prod, int strands, std::size_t tuples, int degree,
                                     std::uint64_t seed, std::size_t max_letters) {
  DeltaSquareReport r;
  const BraidWord twist = full_twist(strands);
  r.product_exponent = exponent_sum(prod);
  r.twist_exponent = exponent_sum(twist);
  r.product_pure = braid_permutation(prod, strands).is_identity();
  std::mt19937_64 rng(seed);
  const auto d = static_cast<std::size_t>(degree);
  const std::uint64_t total = factorial(d);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::vector<Permutation> tuple;
    for (int k = 0; k < strands; ++k) tuple.push_back(Permutation::unrank(d, rng() % total));
    const auto a = artin_act_on_tuple(prod, tuple);
    const auto b = artin_act_on_tuple(twist, tuple);
    ++r.tuples;
    if (a == b) continue;
    ++r.mismatched_tuples;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == b[k]) continue;
      ++r.mismatched_entries;
      if (r.mismatched_tuples == 1) r.fingerprint.push_back(std::to_string(k + 1) + ": " + a[k].cycles() + " | " + b[k].cycles());
    }
  }
  if (r.mismatched_tuples == 0) {
    try {
      r.exact_equal = braids_equal(prod, twist, strands, max_letters);
      r.exact_checked = true;
    } catch (const Error&) {
      r.exact_checked = false;
    }
  }
  return r;
}

}  // namespace galcov
