#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "djk/admissible.hpp"
#include "djk/char_classes.hpp"
#include "djk/coloring.hpp"
#include "djk/cx_structures.hpp"
#include "djk/higher_limits.hpp"
#include "djk/json_io.hpp"

namespace djk::cli {

namespace {

using json_io::Json;

// Domain failure that should end with exit status 1 and a JSON answer.
struct DomainFailure {
  Json answer;
  std::string message;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": malformed JSON: " + e.what());
  }
}

template <typename F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  } catch (const Json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

SimplicialComplex load_complex(const std::string& path) {
  const Json j = read_json(path);
  return with_path(path, [&] { return json_io::complex_from_json(j); });
}

Json big(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
  return Json(v.get_str());
}

Json top_faces_json(const SimplicialComplex& k) {
  Json out = Json::array();
  for (FaceSet mu : k.top_faces()) out.push_back(json_io::face_to_json(mu));
  return out;
}

void add_purity_warning(Json& out, const SimplicialComplex& k) {
  if (!k.is_pure()) {
    out["warnings"] = Json::array({"complex is not pure; Euler classes use only the faces of cardinality " +
                                   std::to_string(k.n())});
  }
}

VertexSign parse_vertex_signs(const SimplicialComplex& k, const std::string& text) {
  const auto s = json_io::parse_signs(text);
  if (static_cast<int>(s.size()) != k.vertex_count()) {
    throw std::invalid_argument("--f: expected " + std::to_string(k.vertex_count()) + " vertex signs, got " +
                                std::to_string(s.size()));
  }
  return VertexSign(s);
}

SignFunction parse_face_signs(const SimplicialComplex& k, const std::string& text) {
  const auto s = json_io::parse_signs(text);
  if (s.size() != k.top_faces().size()) {
    throw std::invalid_argument("--omega: expected " + std::to_string(k.top_faces().size()) +
                                " signs (one per top face), got " + std::to_string(s.size()));
  }
  return SignFunction(k, s);
}

struct Options {
  std::string complex_path;
  std::string second_path;
  std::string omega;
  std::string f;
  std::string face;
  bool explain = false;
  bool unoriented = false;
  bool all_faces = false;
  unsigned threads = 1;
  int s = 0;
  int m = 0;
  int n = 0;
  int r = 0;
  int ring = 0;
  int max_degree = -1;
  int coefficient_rank = 1;
};

Json cmd_classes(const Options& o) {
  const SimplicialComplex k = load_complex(o.complex_path);
  Json out;
  out["chern"] = json_io::polynomial_to_json(total_chern(k));
  out["pontrjagin"] = json_io::polynomial_to_json(total_pontrjagin(k));
  if (!o.f.empty()) {
    const VertexSign f = parse_vertex_signs(k, o.f);
    const SRPolynomial cf = chern_f(k, f);
    out["chern_f"] = json_io::polynomial_to_json(cf);
    out["euler_f"] = json_io::polynomial_to_json(euler_f(k, f));
    out["pontrjagin_of_chern_f"] = json_io::polynomial_to_json(pontrjagin_of_chern(cf));
  }
  if (o.explain) out["top_faces"] = top_faces_json(k);
  add_purity_warning(out, k);
  return out;
}

Json cmd_sqrt_enum(const Options& o) {
  const SimplicialComplex k = load_complex(o.complex_path);
  if (o.threads == 0) throw std::invalid_argument("--threads: must be positive");
  const auto roots = sqrt_enumerate(k, o.threads);
  Json classes = Json::array();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    classes.push_back(Json{{"omega", json_io::format_signs(sqrt_enumeration_signs(k, i).values())},
                           {"euler", json_io::polynomial_to_json(roots[i])}});
  }
  Json out;
  out["count"] = roots.size();
  out["classes"] = classes;
  if (o.explain) out["top_faces"] = top_faces_json(k);
  add_purity_warning(out, k);
  return out;
}

Json cmd_structures(const Options& o) {
  const SimplicialComplex k = load_complex(o.complex_path);
  if (o.omega.empty() == o.f.empty()) throw std::invalid_argument("structures: give exactly one of --omega or --f");
  const SignFunction omega = o.omega.empty() ? omega_from_f(k, parse_vertex_signs(k, o.f)) : parse_face_signs(k, o.omega);
  const Equivalence mode = o.unoriented ? Equivalence::unoriented : Equivalence::oriented;
  const auto witness = realizable(omega, mode);
  Json out;
  out["realizable"] = witness.has_value();
  out["count"] = big(count_structures(omega, mode));
  if (witness) {
    out["epsilon"] = witness->epsilon;
    out["f"] = json_io::format_signs(witness->f.values());
  }
  if (o.explain) {
    out["omega"] = json_io::format_signs(omega.values());
    out["top_faces"] = top_faces_json(k);
  }
  add_purity_warning(out, k);
  return out;
}

Json cmd_stable_count(const Options& o) {
  const SimplicialComplex k = load_complex(o.complex_path);
  Json out;
  out["count"] = big(stable_count(k, o.s));
  return out;
}

Json cmd_admissible(const Options& o) {
  const SimplicialComplex k = load_complex(o.complex_path);
  const Json mj = read_json(o.second_path);
  const ExactMatrix a = with_path(o.second_path, [&] {
    return json_io::matrix_from_json(mj, static_cast<std::size_t>(k.vertex_count()));
  });
  const AdmissibilityResult r = o.all_faces ? is_admissible_all_faces(k, a) : is_admissible(k, a);
  Json out;
  out["admissible"] = r.admissible;
  if (r.witness) out["witness"] = json_io::face_to_json(*r.witness);
  return out;
}

Json cmd_vandermonde(const Options& o) { return json_io::matrix_to_json(vandermonde(o.m, o.n)); }

Json groups_json(const std::vector<AbGroup>& groups, int first_degree) {
  Json out = Json::array();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    Json g = json_io::group_to_json(groups[i]);
    g["degree"] = first_degree + static_cast<int>(i);
    out.push_back(g);
  }
  return out;
}

Ring ring_of(int p) {
  if (p < 0) throw std::invalid_argument("--ring: must be 0 or a prime");
  return p == 0 ? Ring::integers() : Ring::prime_field(static_cast<std::uint32_t>(p));
}

Json cmd_limits(const Options& o) {
  const Json j = read_json(o.complex_path);
  const AbFunctor phi = with_path(o.complex_path, [&] { return json_io::functor_from_json(j); });
  const int degree = o.max_degree >= 0 ? o.max_degree : phi.complex().n() + 1;
  Json out;
  out["ring"] = phi.ring().name();
  out["lim"] = groups_json(lim_groups(phi, degree), 0);
  return out;
}

Json cmd_link_cohomology(const Options& o) {
  const SimplicialComplex k = load_complex(o.complex_path);
  const FaceSet alpha = json_io::parse_face(o.face);
  if (!k.is_face(alpha)) throw std::invalid_argument("--face: " + alpha.to_string() + " is not a face");
  if (o.coefficient_rank < 0) throw std::invalid_argument("--coefficient-rank: must be non-negative");
  const Ring ring = ring_of(o.ring);
  Json out;
  out["face"] = json_io::face_to_json(alpha);
  out["link"] = json_io::complex_to_json(k.link(alpha));
  out["ring"] = ring.name();
  out["reduced_cohomology"] =
      groups_json(link_cohomology(k, alpha, ring, static_cast<std::size_t>(o.coefficient_rank)), -1);
  return out;
}

Json cmd_color(const Options& o) {
  const SimplicialComplex k = load_complex(o.complex_path);
  int r = o.r;
  Json out;
  if (r == 0) {
    r = chromatic_number(k);
    out["chromatic_number"] = r;
  }
  const auto g = find_coloring(k, r);
  if (!g) {
    out["colors"] = nullptr;
    throw DomainFailure{out, "no regular " + std::to_string(r) + "-coloring exists"};
  }
  out["colors"] = g->colors();
  return out;
}

Json cmd_quasitoric(const Options& o) {
  const Json j = read_json(o.complex_path);
  const DicharacteristicPair pair = with_path(o.complex_path, [&] { return json_io::pair_from_json(j); });
  try {
    const ValidatedPair v = validate_pair(pair);
    const auto witness = pair_complex_structure(pair);
    Json out;
    out["signs"] = json_io::format_signs(v.signs.values());
    out["euler"] = json_io::polynomial_to_json(v.euler);
    out["complex_structure"] = witness.has_value();
    if (witness) {
      out["epsilon"] = witness->epsilon;
      out["f"] = json_io::format_signs(witness->f.values());
    }
    if (o.explain) out["top_faces"] = top_faces_json(pair.complex);
    return out;
  } catch (const PairValidationError& e) {
    Json out;
    out["error"] = "not unimodular";
    out["face"] = json_io::face_to_json(e.face());
    out["determinant"] = big(e.determinant());
    throw DomainFailure{out, e.what()};
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stanley-Reisner ring and Davis-Januszkiewicz bundle computations", "djk"};
  app.require_subcommand(1);
  Options o;

  auto* classes = app.add_subcommand("classes", "c(K), p(K) and optionally c_f(K)");
  classes->add_option("complex", o.complex_path, "complex JSON")->required();
  classes->add_option("--f", o.f, "vertex signs, e.g. +,-,+");
  classes->add_flag("--explain", o.explain, "list top faces");

  auto* sqrt_enum = app.add_subcommand("sqrt-enum", "all square roots e_ω of (-1)^n p_n(K)");
  sqrt_enum->add_option("complex", o.complex_path, "complex JSON")->required();
  sqrt_enum->add_option("--threads", o.threads, "worker threads");
  sqrt_enum->add_flag("--explain", o.explain, "list top faces");

  auto* structures = app.add_subcommand("structures", "realizability and count of complex structures on ρ_ω");
  structures->add_option("complex", o.complex_path, "complex JSON")->required();
  auto* omega_opt = structures->add_option("--omega", o.omega, "signs on top faces in lex order");
  auto* f_opt = structures->add_option("--f", o.f, "vertex signs; uses ω_f");
  omega_opt->excludes(f_opt);
  structures->add_flag("--unoriented", o.unoriented, "allow ω = -ε ω_f as well");
  structures->add_flag("--explain", o.explain, "list top faces");

  auto* stable = app.add_subcommand("stable-count", "complex structures in the stable range s > n");
  stable->add_option("complex", o.complex_path, "complex JSON")->required();
  stable->add_option("-s", o.s, "half the real rank")->required();

  auto* admissible = app.add_subcommand("admissible", "K-admissibility of an exact matrix");
  admissible->add_option("complex", o.complex_path, "complex JSON")->required();
  admissible->add_option("matrix", o.second_path, "matrix JSON")->required();
  admissible->add_flag("--all-faces", o.all_faces, "check every face instead of the facets");

  auto* vander = app.add_subcommand("vandermonde", "the (m-n) × m Vandermonde matrix");
  vander->add_option("-m", o.m, "vertices")->required();
  vander->add_option("-n", o.n, "dim K + 1")->required();

  auto* limits = app.add_subcommand("limits", "higher limits of a functor over cat(K)^op");
  limits->add_option("functor", o.complex_path, "functor JSON")->required();
  limits->add_option("--max-degree", o.max_degree, "highest degree (default n + 1)");

  auto* link = app.add_subcommand("link-cohomology", "reduced cohomology of a link");
  link->add_option("complex", o.complex_path, "complex JSON")->required();
  link->add_option("--face", o.face, "face, e.g. 1,2 (empty for ∅)")->required();
  link->add_option("--ring", o.ring, "0 for Z or a prime p");
  link->add_option("--coefficient-rank", o.coefficient_rank, "rank of the coefficient module");

  auto* color = app.add_subcommand("color", "a regular coloring");
  color->add_option("complex", o.complex_path, "complex JSON")->required();
  color->add_option("-r", o.r, "number of colors (default: chromatic number)")->check(CLI::PositiveNumber);

  auto* quasitoric = app.add_subcommand("quasitoric", "complex structure test for a dicharacteristic pair");
  quasitoric->add_option("pair", o.complex_path, "pair JSON")->required();
  quasitoric->add_flag("--explain", o.explain, "list top faces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Json result;
    if (classes->parsed()) result = cmd_classes(o);
    else if (sqrt_enum->parsed()) result = cmd_sqrt_enum(o);
    else if (structures->parsed()) result = cmd_structures(o);
    else if (stable->parsed()) result = cmd_stable_count(o);
    else if (admissible->parsed()) result = cmd_admissible(o);
    else if (vander->parsed()) result = cmd_vandermonde(o);
    else if (limits->parsed()) result = cmd_limits(o);
    else if (link->parsed()) result = cmd_link_cohomology(o);
    else if (color->parsed()) result = cmd_color(o);
    else if (quasitoric->parsed()) result = cmd_quasitoric(o);
    out << result.dump() << "\n";
    return 0;
  } catch (const DomainFailure& f) {
    out << f.answer.dump() << "\n";
    err << "error: " << f.message << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace djk::cli
