#include "galcov/kernel_symbol.hpp"

#include <charconv>
#include <vector>

namespace galcov {

namespace {

// GeneratorId.index layout: form | degree | rank(σ) | a | b
constexpr int kFormShift = 60;
constexpr int kDegreeShift = 54;
constexpr int kRankShift = 10;
constexpr int kAShift = 5;
constexpr std::uint64_t kSmall = 0x1f;
constexpr std::uint64_t kRankMask = (std::uint64_t{1} << 44) - 1;

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("malformed kernel symbol '" + std::string(whole) + "'");
  }
  return v;
}

std::string spell(const Permutation& p) {
  std::string s;
  for (int v : p.images()) {
    if (!s.empty()) s += '.';
    s += std::to_string(v);
  }
  return s;
}

char form_letter(KernelForm f) {
  switch (f) {
    case KernelForm::RawGamma: return 'R';
    case KernelForm::AsigmaJ:
    case KernelForm::Akl: return 'A';
    case KernelForm::Xsigma:
    case KernelForm::Xkl: return 'X';
    case KernelForm::Bsigma:
    case KernelForm::Bkl: return 'B';
    case KernelForm::Ckl: return 'C';
  }
  return '?';
}

}  // namespace

KernelSymbol KernelSymbol::raw(Permutation sigma, int line, bool primed) {
  KernelSymbol s;
  s.form = KernelForm::RawGamma;
  s.sigma = std::move(sigma);
  s.j = line;
  s.primed = primed;
  return s;
}

KernelSymbol KernelSymbol::a_sigma(Permutation sigma, int j) {
  KernelSymbol s;
  s.form = KernelForm::AsigmaJ;
  s.sigma = std::move(sigma);
  s.j = j;
  return s;
}

KernelSymbol KernelSymbol::x_sigma(Permutation sigma) {
  KernelSymbol s;
  s.form = KernelForm::Xsigma;
  s.sigma = std::move(sigma);
  return s;
}

KernelSymbol KernelSymbol::b_sigma(Permutation sigma) {
  KernelSymbol s;
  s.form = KernelForm::Bsigma;
  s.sigma = std::move(sigma);
  return s;
}

KernelSymbol KernelSymbol::pair(KernelForm form, int k, int l) {
  if (k == l || k < 1 || l < 1) throw Error("pair symbol needs distinct positive indices");
  KernelSymbol s;
  s.form = form;
  s.k = k;
  s.l = l;
  if (!s.is_pair_form()) throw Error("not a pair form");
  return s;
}

bool KernelSymbol::is_pair_form() const {
  return form == KernelForm::Akl || form == KernelForm::Xkl || form == KernelForm::Bkl || form == KernelForm::Ckl;
}

GeneratorId KernelSymbol::id() const {
  std::uint64_t v = static_cast<std::uint64_t>(form) << kFormShift;
  if (is_pair_form()) {
    v |= (static_cast<std::uint64_t>(k) & kSmall) << kAShift;
    v |= static_cast<std::uint64_t>(l) & kSmall;
  } else {
    if (sigma.degree() > 15) throw Error("kernel symbol degree too large");
    v |= static_cast<std::uint64_t>(sigma.degree()) << kDegreeShift;
    v |= (sigma.rank() & kRankMask) << kRankShift;
    v |= (static_cast<std::uint64_t>(j) & kSmall) << kAShift;
  }
  return {Alphabet::Kernel, v, form == KernelForm::RawGamma && primed};
}

KernelSymbol KernelSymbol::from_id(GeneratorId g) {
  if (g.alphabet != Alphabet::Kernel) throw Error("not a kernel generator");
  KernelSymbol s;
  s.form = static_cast<KernelForm>(g.index >> kFormShift);
  if (s.is_pair_form()) {
    s.k = static_cast<int>((g.index >> kAShift) & kSmall);
    s.l = static_cast<int>(g.index & kSmall);
  } else {
    auto degree = static_cast<std::size_t>((g.index >> kDegreeShift) & 0x3f);
    s.sigma = Permutation::unrank(degree, (g.index >> kRankShift) & kRankMask);
    s.j = static_cast<int>((g.index >> kAShift) & kSmall);
    s.primed = g.primed;
  }
  return s;
}

std::string KernelSymbol::name() const {
  std::string out(1, form_letter(form));
  if (is_pair_form()) return out + std::to_string(k) + "." + std::to_string(l);
  out += "[" + spell(sigma) + "]";
  if (form == KernelForm::AsigmaJ) out += std::to_string(j);
  if (form == KernelForm::RawGamma) out += "g" + std::to_string(j) + (primed ? "p" : "");
  return out;
}

KernelSymbol KernelSymbol::parse(std::string_view token) {
  if (token.size() < 2) throw Error("malformed kernel symbol '" + std::string(token) + "'");
  const char c = token[0];
  std::string_view rest = token.substr(1);
  if (rest[0] != '[') {
    auto dot = rest.find('.');
    if (dot == std::string_view::npos) throw Error("malformed kernel symbol '" + std::string(token) + "'");
    int k = parse_int(rest.substr(0, dot), token);
    int l = parse_int(rest.substr(dot + 1), token);
    switch (c) {
      case 'A': return pair(KernelForm::Akl, k, l);
      case 'X': return pair(KernelForm::Xkl, k, l);
      case 'B': return pair(KernelForm::Bkl, k, l);
      case 'C': return pair(KernelForm::Ckl, k, l);
      default: throw Error("unknown kernel symbol '" + std::string(token) + "'");
    }
  }
  auto close = rest.find(']');
  if (close == std::string_view::npos) throw Error("malformed kernel symbol '" + std::string(token) + "'");
  std::vector<int> images;
  std::string_view body = rest.substr(1, close - 1);
  while (!body.empty()) {
    auto dot = body.find('.');
    images.push_back(parse_int(body.substr(0, dot), token));
    if (dot == std::string_view::npos) break;
    body = body.substr(dot + 1);
  }
  Permutation sigma = Permutation::from_images(images);
  std::string_view tail = rest.substr(close + 1);
  switch (c) {
    case 'X':
      if (!tail.empty()) break;
      return x_sigma(sigma);
    case 'B':
      if (!tail.empty()) break;
      return b_sigma(sigma);
    case 'A':
      return a_sigma(sigma, parse_int(tail, token));
    case 'R': {
      if (tail.size() < 2 || tail[0] != 'g') break;
      bool primed = tail.back() == 'p';
      std::string_view digits = tail.substr(1, tail.size() - 1 - (primed ? 1 : 0));
      return raw(sigma, parse_int(digits, token), primed);
    }
    default:
      break;
  }
  throw Error("malformed kernel symbol '" + std::string(token) + "'");
}

}  // namespace galcov
