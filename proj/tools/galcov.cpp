#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "galcov/kernel.hpp"
#include "galcov/pipeline.hpp"
#include "galcov/smith.hpp"

using namespace galcov;
using nlohmann::json;

namespace {

struct Common {
  int n = 2;
  std::string format = "text";
  std::string out;
  int depth = 0;
  int window = 2;
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    atomic_write(c.out, text);
  }
}

void check_common(const Common& c) {
  RunConfig cfg;
  cfg.n = c.n;
  cfg.format = c.format;
  cfg.depth = c.depth;
  cfg.window = c.window;
  cfg.validate();
}

std::string pair_text(std::pair<int, int> p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

int cmd_degenerate(const Common& c) {
  const auto cx = build_complex(c.n);
  if (c.format == "json") {
    json j{{"schema", 1}, {"n", c.n}};
    for (const auto& l : cx.lines()) {
      j["lines"].push_back({{"index", l.index},
                            {"endpoints", {l.endpoints.first, l.endpoints.second}},
                            {"class", l.klass == LineClass::Vertical ? "vertical" : "diagonal"},
                            {"adjacent_planes", {l.adjacent_planes.first, l.adjacent_planes.second}}});
    }
    for (const auto& t : cx.three_points()) {
      j["three_points"].push_back({{"index", t.index}, {"vertical", t.vertical_line}, {"diagonal", t.diagonal_line}});
    }
    for (const auto& p : cx.planes()) j["planes"].push_back({{"index", p.index}, {"vertices", p.vertices}});
    for (auto [a, b] : cx.incidental_pairs()) j["incidental_pairs"].push_back({a, b});
    emit(c, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "lines\n";
  for (const auto& l : cx.lines()) {
    out << "  " << l.index << " " << pair_text(l.endpoints) << " "
        << (l.klass == LineClass::Vertical ? "vertical" : "diagonal") << " planes " << pair_text(l.adjacent_planes)
        << "\n";
  }
  out << "3-points\n";
  for (const auto& t : cx.three_points()) {
    out << "  V" << t.index << " vertical " << t.vertical_line << " diagonal " << t.diagonal_line << "\n";
  }
  out << "planes\n";
  for (const auto& p : cx.planes()) {
    out << "  P" << p.index << " vertices";
    for (int v : p.vertices) out << " " << v;
    out << "\n";
  }
  out << "incidental pairs";
  for (auto p : cx.incidental_pairs()) out << " " << pair_text(p);
  out << "\n";
  emit(c, out.str());
  return 0;
}

int cmd_monodromy(const Common& c) {
  const auto cx = build_complex(c.n);
  const auto factors = full_factorization(cx);
  const auto cs = census(c.n);
  if (c.format == "json") {
    json j{{"schema", 1}, {"n", c.n}};
    for (const auto& f : factors) {
      j["factors"].push_back({{"kind", kind_name(f.kind)},
                              {"label", f.label},
                              {"singularity", f.source.describe()},
                              {"exponent", f.exponent},
                              {"braid", to_string(f.braid())}});
    }
    j["census"] = {{"branch", cs.branch}, {"cusp", cs.cusp}, {"node", cs.node}, {"degree", cs.degree},
                   {"permutation_identity", cs.permutation_identity}};
    emit(c, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  for (const auto& f : factors) out << kind_name(f.kind) << "  " << f.label << "  " << to_string(f.braid()) << "\n";
  out << "branch " << cs.branch << " cusp " << cs.cusp << " node " << cs.node << " degree " << cs.degree
      << " permutation identity " << (cs.permutation_identity ? "yes" : "no") << "\n";
  emit(c, out.str());
  return 0;
}

json presentation_json(const GroupPresentation& p) {
  json j{{"schema", 1}, {"name", p.name}, {"n", p.n}};
  j["generators"] = json::array();
  for (const auto& g : p.generators) j["generators"].push_back(generator_name(g));
  j["relators"] = json::array();
  for (const auto& r : p.relators) j["relators"].push_back(to_string(r));
  return j;
}

void emit_presentation(const Common& c, const GroupPresentation& p) {
  emit(c, c.format == "json" ? presentation_json(p).dump(2) + "\n" : write_presentation(p));
}

GroupPresentation build_kind(const std::string& kind, const Common& c, bool projective) {
  if (kind == "pitilde") return pitilde_presentation(c.n, c.depth, projective);
  if (kind == "pres1") {
    auto p = pres1_presentation(build_complex(c.n), c.depth);
    return projective ? add_projective_relation(p) : p;
  }
  if (kind == "braid") {
    auto p = quotient_squares(braid_presentation(build_complex(c.n)));
    return projective ? add_projective_relation(p) : p;
  }
  if (kind == "theorem100") return theorem100_presentation(c.n, c.window);
  if (kind == "galois") return galois_presentation(c.n, c.window);
  if (kind == "kernel") return kernel_presentation(pitilde_presentation(c.n, c.depth, true), c.n);
  if (kind == "reduced") return reduced_kernel_presentation(pitilde_presentation(c.n, c.depth, true), c.n);
  throw ConfigError("unknown presentation kind " + kind);
}

Permutation parse_images(const std::string& text, int n) {
  std::istringstream in(text);
  std::vector<int> img;
  int v;
  while (in >> v) {
    if (v < 1) throw ConfigError("permutation images are 1-based");
    img.push_back(v);
  }
  if (img.size() != static_cast<std::size_t>(2 * n)) throw ConfigError("permutation needs 2n images");
  try {
    return Permutation::from_images(img);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

int cmd_psi(const Common& c, const std::string& perm) {
  const auto rep = psi_check(c.n, c.depth);
  json j{{"schema", 1}, {"n", c.n}};
  std::ostringstream out;
  for (int line = 1; line <= 2 * c.n; ++line) {
    auto [a, b] = psi_points(line, c.n);
    j["images"][std::to_string(line)] = {a, b};
    out << "psi(g" << line << ") = psi(g" << line << "p) = (" << a << " " << b << ")\n";
  }
  if (!perm.empty()) {
    const auto w = phi_word(parse_images(perm, c.n), c.n);
    j["phi"] = to_string(w);
    out << "phi = " << to_string(w) << "\n";
  }
  j["relators_checked"] = rep.relators.checked;
  j["relators_failing"] = rep.relators.failing.size();
  j["surjective"] = rep.surjective;
  j["sections_checked"] = rep.sections_checked;
  j["sections_failing"] = rep.sections_failing;
  j["pass"] = rep.ok();
  out << "relators " << rep.relators.checked << " failing " << rep.relators.failing.size() << ", surjective "
      << (rep.surjective ? "yes" : "no") << ", psi(phi(s)) = s on " << rep.sections_checked << " permutations, "
      << rep.sections_failing << " failing\n"
      << (rep.ok() ? "PASS" : "FAIL") << "\n";
  emit(c, c.format == "json" ? j.dump(2) + "\n" : out.str());
  return rep.ok() ? 0 : 1;
}

int cmd_abelianize(const Common& c, const std::string& input, const std::string& kind) {
  GroupPresentation p;
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw ConfigError("cannot open " + input);
    p = parse_presentation(in);
  } else {
    p = build_kind(kind, c, kind != "galois" && kind != "theorem100");
  }
  const auto snf = smith_normal_form(abelianize(p));
  if (c.format == "json") {
    json j{{"schema", 1}, {"presentation", p.name}, {"generators", p.generators.size()},
           {"relators", p.relators.size()}, {"free_rank", snf.free_rank}, {"group", snf.describe()}};
    j["torsion"] = json::array();
    for (const auto& t : snf.torsion()) j["torsion"].push_back(t.str());
    emit(c, j.dump(2) + "\n");
  } else {
    emit(c, p.name + ": " + snf.describe() + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental groups of Galois covers of degenerating surfaces"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  Common c;
  RunConfig rc;
  std::string kind = "pitilde", input, perm, strategy = "felsch";
  bool projective = false;

  auto common = [&](CLI::App* s) {
    s->add_option("--n", c.n, "Number of planes is 2n")->default_val(2);
    s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--out", c.out, "Write output to this file");
  };
  auto analysis = [&](CLI::App* s) {
    s->add_option("--depth", c.depth, "Conjugate representative depth d");
    s->add_option("--window", c.window, "Index window of the kernel presentation");
  };

  auto* deg = app.add_subcommand("degenerate", "Print the degeneration complex");
  common(deg);
  auto* mon = app.add_subcommand("monodromy", "Print the braid monodromy factorization");
  common(mon);
  auto* pres = app.add_subcommand("presentation", "Write a group presentation");
  common(pres);
  analysis(pres);
  pres->add_option("--kind", kind, "pitilde, pres1, braid, theorem100, galois, kernel or reduced");
  pres->add_flag("--projective", projective, "Add the projective relation");
  auto* psi = app.add_subcommand("psi", "Check the permutation monodromy and its section");
  common(psi);
  psi->add_option("--depth", c.depth, "Conjugate representative depth d");
  psi->add_option("--perm", perm, "Images of 1..2n, space separated; prints its phi word");
  auto* ker = app.add_subcommand("kernel", "Reidemeister-Schreier presentation of the kernel of psi");
  common(ker);
  ker->add_option("--depth", c.depth, "Conjugate representative depth d");
  bool reduced = false;
  ker->add_flag("--reduced", reduced, "Rewrite into A_kl, X_kl generators");
  auto* ab = app.add_subcommand("abelianize", "Smith normal form of an abelianized presentation");
  common(ab);
  analysis(ab);
  ab->add_option("--kind", kind, "Presentation kind when no --input is given")->default_val("galois");
  ab->add_option("--input", input, "Presentation file");
  auto* ver = app.add_subcommand("verify", "Run the full certificate");
  common(ver);
  analysis(ver);
  ver->add_option("--mod", rc.mod, "Exponent m of the finite quotient");
  ver->add_option("--max-cosets", rc.max_cosets, "Coset budget");
  ver->add_option("--strategy", strategy, "felsch or hlt")->check(CLI::IsMember({"felsch", "hlt"}));
  ver->add_option("--cache-dir", rc.cache_dir, "Cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    check_common(c);
    if (deg->parsed()) return cmd_degenerate(c);
    if (mon->parsed()) return cmd_monodromy(c);
    if (pres->parsed()) {
      emit_presentation(c, build_kind(kind, c, projective));
      return 0;
    }
    if (psi->parsed()) return cmd_psi(c, perm);
    if (ker->parsed()) {
      auto pt = pitilde_presentation(c.n, c.depth, true);
      emit_presentation(c, reduced ? reduced_kernel_presentation(pt, c.n) : kernel_presentation(pt, c.n));
      return 0;
    }
    if (ab->parsed()) return cmd_abelianize(c, input, kind);
    if (ver->parsed()) {
      rc.n = c.n;
      rc.format = c.format;
      rc.out_path = c.out;
      rc.depth = c.depth;
      rc.window = c.window;
      rc.strategy = strategy == "hlt" ? Strategy::HLT : Strategy::Felsch;
      const auto rep = run_pipeline(rc);
      emit(c, emit_report(rep, c.format));
      if (!rep.pass()) {
        for (const auto& ch : rep.checks) {
          if (!ch.pass) std::cerr << "failed check: " << ch.name << "\n";
        }
      }
      return rep.exit_code();
    }
  } catch (const ConfigError& e) {
    std::cerr << "galcov: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "galcov: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
