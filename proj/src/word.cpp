#include "galcov/word.hpp"

#include <charconv>
#include <sstream>

#include "galcov/kernel_symbol.hpp"

namespace galcov {

FreeWord::FreeWord(std::initializer_list<Letter> letters) : letters_(letters) {}

FreeWord FreeWord::of(GeneratorId g, int exp) {
  FreeWord w;
  const int step = exp >= 0 ? 1 : -1;
  for (int i = 0; i != exp; i += step) w.letters_.push_back({g, step});
  return w;
}

void FreeWord::append_reduced(Letter l) {
  if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

void FreeWord::append_reduced(const FreeWord& w) {
  for (const Letter& l : w.letters_) append_reduced(l);
}

FreeWord FreeWord::inverse() const {
  FreeWord r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
  return r;
}

FreeWord FreeWord::power(int e) const {
  FreeWord base = e >= 0 ? *this : inverse();
  FreeWord r;
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) r.append_reduced(base);
  return r;
}

bool FreeWord::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i].gen == letters_[i - 1].gen && letters_[i].exp == -letters_[i - 1].exp) return false;
  }
  return true;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord r = reduce(a);
  r.append_reduced(b);
  return r;
}

FreeWord reduce(const FreeWord& w) {
  FreeWord r;
  for (const Letter& l : w) r.append_reduced(l);
  return r;
}

FreeWord cyclically_reduce(const FreeWord& w) {
  FreeWord r = reduce(w);
  const auto& ls = r.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo].gen == ls[hi - 1].gen && ls[lo].exp == -ls[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return FreeWord(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                      ls.begin() + static_cast<std::ptrdiff_t>(hi)));
}

FreeWord conjugate(const FreeWord& w, const FreeWord& by) { return by * w * by.inverse(); }

FreeWord commutator(const FreeWord& a, const FreeWord& b) { return a * b * a.inverse() * b.inverse(); }

FreeWord substitute(const FreeWord& w, const Substitution& images) {
  FreeWord r;
  for (const Letter& l : w) {
    auto it = images.find(l.gen);
    if (it == images.end()) throw Error("no image for generator " + generator_name(l.gen));
    r.append_reduced(l.exp > 0 ? it->second : it->second.inverse());
  }
  return r;
}

long exponent_sum(const FreeWord& w, std::optional<GeneratorId> g) {
  long s = 0;
  for (const Letter& l : w) {
    if (!g || l.gen == *g) s += l.exp;
  }
  return s;
}

std::string generator_name(GeneratorId g) {
  switch (g.alphabet) {
    case Alphabet::Surface:
      return "g" + std::to_string(g.index) + (g.primed ? "p" : "");
    case Alphabet::Artin:
      return "s" + std::to_string(g.index);
    case Alphabet::Kernel:
      return KernelSymbol::from_id(g).name();
  }
  return "?";
}

namespace {

bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

GeneratorId parse_generator_name(std::string_view token) {
  if (token.empty()) throw Error("empty generator token");
  std::uint64_t idx = 0;
  if (token[0] == 'g') {
    bool primed = token.size() > 1 && token.back() == 'p';
    std::string_view digits = token.substr(1, token.size() - 1 - (primed ? 1 : 0));
    if (!parse_uint(digits, idx) || idx == 0) throw Error("malformed surface generator '" + std::string(token) + "'");
    return {Alphabet::Surface, idx, primed};
  }
  if (token[0] == 's') {
    if (!parse_uint(token.substr(1), idx) || idx == 0) {
      throw Error("malformed Artin generator '" + std::string(token) + "'");
    }
    return GeneratorId::artin(static_cast<int>(idx));
  }
  return KernelSymbol::parse(token).id();
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += generator_name(l.gen);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

FreeWord parse_word(std::string_view text) {
  FreeWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    int exp = 1;
    constexpr std::string_view inv = "^-1";
    if (tok.size() > inv.size() && tok.compare(tok.size() - inv.size(), inv.size(), inv) == 0) {
      exp = -1;
      tok.resize(tok.size() - inv.size());
    }
    if (tok.find('^') != std::string::npos) throw Error("unsupported exponent in token '" + tok + "'");
    w.push_back({parse_generator_name(tok), exp});
  }
  return w;
}

}  // namespace galcov
