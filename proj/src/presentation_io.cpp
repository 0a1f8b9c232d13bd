#include <istream>
#include <set>
#include <sstream>

#include "galcov/presentation.hpp"

namespace galcov {

void write_presentation(const GroupPresentation& p, std::ostream& out) {
  out << "generators:";
  for (const auto& g : p.generators) out << ' ' << generator_name(g);
  out << '\n';
  out << "#@ name=" << p.name << " n=" << p.n << '\n';
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const std::string& origin = i < p.provenance.size() ? p.provenance[i] : std::string();
    if (!origin.empty()) out << "# " << origin << '\n';
    out << to_string(p.relators[i]) << '\n';
  }
}

std::string write_presentation(const GroupPresentation& p) {
  std::ostringstream out;
  write_presentation(p, out);
  return out.str();
}

GroupPresentation parse_presentation(std::istream& in) {
  GroupPresentation p;
  std::string line;
  std::size_t lineno = 0;
  bool have_generators = false;
  std::set<GeneratorId> declared;
  std::string pending;

  auto fail = [&](const std::string& what) -> Error {
    return Error("line " + std::to_string(lineno) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("#@", 0) == 0) {
      std::istringstream meta(line.substr(2));
      std::string kv;
      while (meta >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        if (key == "name") p.name = value;
        if (key == "n") {
          try {
            p.n = std::stoi(value);
          } catch (const std::exception&) {
            throw fail("bad n value '" + value + "'");
          }
        }
      }
      continue;
    }
    if (!line.empty() && line[0] == '#') {
      std::string text = line.substr(1);
      if (!text.empty() && text[0] == ' ') text.erase(0, 1);
      pending = text;
      continue;
    }
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!have_generators) {
      const std::string head = "generators:";
      if (line.rfind(head, 0) != 0) throw fail("expected 'generators:' header");
      std::istringstream toks(line.substr(head.size()));
      std::string tok;
      while (toks >> tok) {
        GeneratorId g;
        try {
          g = parse_generator_name(tok);
        } catch (const Error& e) {
          throw fail(e.what());
        }
        if (!declared.insert(g).second) throw fail("generator " + tok + " declared twice");
        p.generators.push_back(g);
      }
      have_generators = true;
      continue;
    }
    FreeWord w;
    try {
      w = parse_word(line);
    } catch (const Error& e) {
      throw fail(e.what());
    }
    for (const auto& l : w) {
      if (!declared.count(l.gen)) throw fail("undeclared generator " + generator_name(l.gen));
    }
    p.relators.push_back(w);
    p.provenance.push_back(pending);
    pending.clear();
  }
  if (!have_generators) throw Error("presentation has no 'generators:' line");
  return p;
}

GroupPresentation parse_presentation_text(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

}  // namespace galcov
