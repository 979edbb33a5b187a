// houghton: element arithmetic, order queries, homology reports and verification suites.

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <sstream>

#include "houghton/complex.hpp"
#include "houghton/homology.hpp"
#include "houghton/io.hpp"
#include "houghton/poset.hpp"
#include "houghton/suites.hpp"

using namespace houghton;

namespace {

struct Options {
  std::string format = "table";
  std::string out;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    write_text_file(o.out, text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string vector_text(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

GenMap load(const std::string& path) { return genmap_from_json(read_json_file(path)); }

std::string class_line(const GenMap& g, const MapClass& c) {
  std::string n = std::to_string(g.n);
  if (c.in_T) return "T_" + n + " translation";
  if (c.in_Gn) return "G_" + n + " bijective";
  if (c.is_bijective) return "Gtilde_" + n + " bijective, phi=" + vector_text(phi(g));
  if (c.in_M) return "M_" + n + " injective, grade " + std::to_string(grade(g));
  return "injective, not bijective, shifts not diagonal";
}

int cmd_validate(const Options& o, const std::string& file) {
  GenMap g = load(file);
  MapClass c;
  try {
    c = validate(g);
  } catch (const InjectivityError& e) {
    if (o.format == "json")
      emit(o, dump({{"error", "NotInjective"}, {"first", to_json(e.first)}, {"second", to_json(e.second)}, {"image", to_json(e.image)}}));
    else
      emit(o, "NotInjective: " + to_string(e.first) + " and " + to_string(e.second) + " both go to " + to_string(e.image) + "\n");
    return 1;
  }
  if (o.format == "json") {
    Json j = to_json(c);
    j["phi"] = c.is_bijective ? Json(phi(g)) : Json(nullptr);
    j["summary"] = class_line(g, c);
    emit(o, dump(j));
    return 0;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << class_line(g, c) << "\n";
  os << "bijective   " << yn(c.is_bijective) << "\n";
  os << "in Gtilde_n " << yn(c.in_Gtilde) << "\n";
  os << "in G_n      " << yn(c.in_Gn) << "\n";
  os << "in M        " << yn(c.in_M) << "\n";
  os << "in T        " << yn(c.in_T) << "\n";
  emit(o, os.str());
  return 0;
}

int cmd_decompose(const Options& o, const std::string& file) {
  GenMap g = load(file);
  RegionDecomposition d = decompose(g);
  if (o.format == "json") {
    Json j = to_json(d);
    j["grade"] = grade(g);
    emit(o, dump(j));
    return 0;
  }
  std::ostringstream os;
  os << "grade " << grade(g) << "\n";
  os << "vertical rays (" << d.vrays.size() << ")\n";
  for (const auto& v : d.vrays) os << "  " << to_string(v) << "\n";
  os << "horizontal rays (" << d.hrays.size() << ")\n";
  for (const auto& h : d.hrays) os << "  " << to_string(h) << "\n";
  os << "finite part (" << d.finite_part.size() << ")\n";
  for (const auto& p : d.finite_part) os << "  " << to_string(p) << "\n";
  emit(o, os.str());
  return 0;
}

SimplicialComplex sigma_alpha_model(int n, int k) {
  if (k < 2 * n) fail(ErrorCode::PreconditionFailed, "the model needs k >= 2n rays");
  std::vector<Int> e(n, 0);
  for (int s = 0; s < k; ++s) e[s % n] += 1;
  RegionDecomposition r = decompose(translation_map(e));
  std::vector<CandidateMap> cands;
  for (int q = 1; q <= n; ++q)
    for (std::size_t a = 0; a < r.vrays.size(); ++a)
      for (std::size_t b = 0; b < r.hrays.size(); ++b) cands.push_back({q, a, 0, b, 0, {}});
  return finite_sigma_alpha(n, r, cands);
}

SimplicialComplex build_complex(const std::string& gen, int n, int k, const std::string& file) {
  auto need_file = [&] {
    if (file.empty()) fail(ErrorCode::ParseError, "generator '" + gen + "' needs --file");
    return read_json_file(file);
  };
  if (gen == "sigma-nk") return sigma_nk(n, k);
  if (gen == "sigma-alpha-model") return sigma_alpha_model(n, k);
  if (gen == "clique") {
    ColoredGraph g = graph_from_json(need_file());
    return clique_complex(g);
  }
  if (gen == "order-complex") return order_complex(poset_from_json(need_file()));
  if (gen == "nerve") {
    Json j = need_file();
    std::vector<SimplicialComplex> cover;
    for (const auto& m : j.at("cover")) cover.push_back(complex_from_json(m));
    if (j.contains("target")) return nerve(cover, complex_from_json(j["target"]));
    return nerve(cover);
  }
  if (gen == "complex") return complex_from_json(need_file());
  // a bare path is read as a complex file
  return complex_from_json(read_json_file(gen));
}

int cmd_homology(const Options& o, const std::string& gen, int n, int k, const std::string& file) {
  auto t0 = std::chrono::steady_clock::now();
  SimplicialComplex c = build_complex(gen, n, k, file);
  HomologyProfile p = reduced_homology(c);
  if (o.format == "json")
    emit(o, dump(to_json(p)));
  else
    emit(o, to_string(p));
  std::cerr << "wall time " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
  return 0;
}

int cmd_verify(const Options& o, const std::string& suite, int trials, std::uint64_t seed) {
  SuiteReport r = run_suite(suite, trials, seed);
  emit(o, o.format == "json" ? dump(to_json(r)) : to_string(r));
  std::cerr << "wall time " << r.seconds << " s\n";
  return r.ok() ? 0 : 1;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownSuite: return 2;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eventually translational maps, their order and homology of the associated complexes"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--out", o.out, "write the result to a file instead of stdout");

  std::string a, b, point, gen, file, suite = "";
  int n = 2, k = 4, trials = 50;
  std::uint64_t seed = 1;

  auto* validate_cmd = app.add_subcommand("validate", "classify an element file");
  validate_cmd->add_option("file", a)->required();
  auto* compose_cmd = app.add_subcommand("compose", "compose two elements, first operand applied first");
  compose_cmd->add_option("first", a)->required();
  compose_cmd->add_option("second", b)->required();
  auto* invert_cmd = app.add_subcommand("invert", "inverse of a bijective element");
  invert_cmd->add_option("file", a)->required();
  auto* apply_cmd = app.add_subcommand("apply", "image of a point");
  apply_cmd->add_option("file", a)->required();
  apply_cmd->add_option("point", point, "((x,y),i) or x,y,i")->required();
  auto* grade_cmd = app.add_subcommand("grade", "grade of an element of M");
  grade_cmd->add_option("file", a)->required();
  auto* decompose_cmd = app.add_subcommand("decompose", "rays and finite part of the complement of the image");
  decompose_cmd->add_option("file", a)->required();
  auto* homology_cmd = app.add_subcommand("homology", "reduced integral homology of a generated or stored complex");
  homology_cmd->add_option("generator", gen, "sigma-nk, sigma-alpha-model, clique, order-complex, nerve, complex")->required();
  homology_cmd->add_option("--n", n, "number of colors / quadrants");
  homology_cmd->add_option("--k", k, "size parameter");
  homology_cmd->add_option("--file", file, "input document for file-based generators");
  auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
  verify_cmd->add_option("suite", suite)->required();
  verify_cmd->add_option("--trials", trials);
  verify_cmd->add_option("--seed", seed);
  auto* suites_cmd = app.add_subcommand("suites", "list verification suites");

  // options given after the subcommand are accepted too
  for (auto* sub : {validate_cmd, compose_cmd, invert_cmd, apply_cmd, grade_cmd, decompose_cmd, homology_cmd, verify_cmd, suites_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(o, a);
    if (*compose_cmd) {
      GenMap g = compose(load(a), load(b));
      emit(o, dump(to_json(g)));
      return 0;
    }
    if (*invert_cmd) {
      emit(o, dump(to_json(invert(load(a)))));
      return 0;
    }
    if (*apply_cmd) {
      GenMap g = load(a);
      validate(g);
      Point p = g.apply(parse_point(point));
      emit(o, o.format == "json" ? dump(to_json(p)) : to_string(p) + "\n");
      return 0;
    }
    if (*grade_cmd) {
      Int gr = grade(load(a));
      emit(o, o.format == "json" ? dump({{"grade", gr}}) : std::to_string(gr) + "\n");
      return 0;
    }
    if (*decompose_cmd) return cmd_decompose(o, a);
    if (*homology_cmd) return cmd_homology(o, gen, n, k, file);
    if (*verify_cmd) return cmd_verify(o, suite, trials, seed);
    if (*suites_cmd) {
      std::ostringstream os;
      for (const auto& s : suite_catalog()) os << s.name << " [" << s.alias << "]: " << s.property << "\n";
      emit(o, os.str());
      return 0;
    }
  } catch (const InjectivityError& e) {
    std::cerr << "NotInjective: " << to_string(e.first) << " and " << to_string(e.second) << " both go to "
              << to_string(e.image) << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << code_name(e.code()) << ": " << e.detail() << "\n";
    return exit_code(e.code());
  }
  return 2;
}
