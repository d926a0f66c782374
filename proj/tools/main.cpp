// spherekit command-line front end.
//
// Exit codes: 0 = all requested verifications passed; 1 = a mathematical
// verification failed; 2 = input or parse error.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "spherekit/bounds.hpp"
#include "spherekit/harmonics.hpp"
#include "spherekit/hodge.hpp"
#include "spherekit/json_io.hpp"
#include "spherekit/points.hpp"
#include "spherekit/wilson.hpp"

namespace {

using namespace spherekit;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

// Writes atomically: temp file in the same directory, then rename.
void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::filesystem::path p(path);
  std::filesystem::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    os << text;
  }
  std::filesystem::rename(tmp, p);
}

Json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return Json::parse(is);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Reproducibility record: object hash, checked invariants, and the seed.
Json make_certificate(const Json& object, const std::vector<std::string>& invariants,
                      std::uint64_t seed, bool pass) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(fnv1a(object.dump())));
  return {{"object", object},
          {"object_hash", hash},
          {"invariants", invariants},
          {"seed", seed},
          {"pass", pass}};
}

int cmd_qtable(int max_n, const std::string& format, const std::string& out) {
  TableFormat f = TableFormat::Text;
  if (format == "json") f = TableFormat::Json;
  else if (format == "csv") f = TableFormat::Csv;
  else if (format != "text") throw CLI::ValidationError("--format", "unknown format");
  write_text(out, emit_table(max_n, f));
  return kExitPass;
}

int cmd_verify_map(const std::string& path) {
  Json j = read_json_file(path);
  if (j.contains("group")) {
    MatrixPolyMap M = matrix_map_from_json(j);
    MatrixVerifyReport rep = verify_matrix_map(M);
    std::cout << (rep.pass ? "PASS" : "FAIL") << " matrix map S^" << M.source_dim
              << " -> " << group_tag_name(M.group) << "(" << M.size << ")";
    if (!rep.pass) std::cout << ": " << rep.detail;
    std::cout << "\n";
    return rep.pass ? kExitPass : kExitVerifyFail;
  }
  SphereMap F = sphere_map_from_json(j);
  VerifyReport rep = verify_sphere_map(F);
  std::cout << (rep.pass ? "PASS" : "FAIL") << " sphere map S^" << F.source_dim
            << " -> S^" << F.target_dim << " degree " << F.degree_repr();
  if (!rep.pass) std::cout << "\n  residual: " << poly_to_string(rep.residual);
  std::cout << "\n";
  return rep.pass ? kExitPass : kExitVerifyFail;
}

int cmd_clifford(long m, const std::string& out, std::uint64_t seed) {
  CliffordSystem cs = clifford_system(m);
  CliffordVerifyReport rep = verify_clifford(cs);
  bool count_ok = int(cs.structures.size()) == radon_hurwitz(m) - 1;
  Json cert = make_certificate(
      clifford_to_json(cs),
      {"orthogonal", "square=-1", "anticommute", "count=rho(m)-1"}, seed,
      rep.pass && count_ok);
  write_text(out, cert.dump(2) + "\n");
  return (rep.pass && count_ok) ? kExitPass : kExitVerifyFail;
}

int cmd_hopf(long m, const std::string& out, std::uint64_t seed) {
  NormedBilinear F = normed_bilinear_from_clifford(clifford_system(m));
  bool normed_ok = verify_normed(F);
  SphereMap H = hopf_construction(F);
  VerifyReport rep = verify_sphere_map(H);
  bool nc = !is_constant(H);
  Json cert = make_certificate(
      sphere_map_to_json(H),
      {"normed_identity", "unit_sphere_image", "non_constant"}, seed,
      normed_ok && rep.pass && nc);
  write_text(out, cert.dump(2) + "\n");
  return (normed_ok && rep.pass && nc) ? kExitPass : kExitVerifyFail;
}

int cmd_hodge_check(int dim, int trials, std::uint64_t seed, const std::string& out) {
  if (dim < 4 || dim % 2 != 0)
    throw CLI::ValidationError("--dim", "even dimension >= 4 required");
  // isometry of the intertwiner on random exact unit vectors
  bool isometry = true;
  auto pts = rational_sphere_points(dim - 1, trials, seed);
  for (const auto& v : pts) {
    auto M = intertwiner_p(v);
    std::size_t d = M.size();
    for (std::size_t i = 0; i < d && isometry; ++i)
      for (std::size_t j = 0; j < d && isometry; ++j) {
        GaussRat dot;
        for (std::size_t k = 0; k < d; ++k) dot += M[k][i].conj() * M[k][j];
        if (!(dot == GaussRat(Rat(i == j ? 1 : 0)))) isometry = false;
      }
  }
  EquivarianceReport eq = verify_p_equivariance(dim, trials, seed);
  bool fiber_ok = true;
  if (dim == 4) {
    SphereMap F = extract_fiber_map();
    fiber_ok = verify_sphere_map(F).pass && map_fourier_degree(F) == 2;
  }
  bool pass = isometry && eq.pass() && fiber_ok;
  Json rep = {{"dim", dim},
              {"isometry", isometry},
              {"equivariance", {{"trials", eq.trials}, {"failures", eq.failures}}},
              {"fiber_map_matches_hopf", fiber_ok},
              {"seed", seed},
              {"pass", pass}};
  write_text(out, rep.dump(2) + "\n");
  return pass ? kExitPass : kExitVerifyFail;
}

int cmd_harmonic_degree(const std::string& path) {
  Json j = read_json_file(path);
  SphereMap F = sphere_map_from_json(j);
  SphereContext ctx = F.source_ctx();
  int maxd = 0;
  for (std::size_t i = 0; i < F.coords.size(); ++i) {
    int d = fourier_degree(F.coords[i], ctx);
    maxd = std::max(maxd, d);
    std::cout << "coord " << i << ": degree " << d << "\n";
  }
  std::cout << "max: " << maxd << "\n";
  return kExitPass;
}

int cmd_wilson(const std::string& group_path, const std::string& bundle_path,
               int max_len, double tol, const std::string& out) {
  SchottkyGroup G = schottky_from_json(read_json_file(group_path));
  validate_schottky(G);
  FlatBundle B = bundle_from_json(read_json_file(bundle_path));
  validate_bundle(B, G.rank());
  auto classes = enumerate_classes(G, max_len);
  Json arr = Json::array();
  bool bound_ok = true;
  for (const auto& e : classes) {
    GaussRat w = wilson_loop(B, e.word);
    if (w.norm2() > Rat(B.rank) * Rat(B.rank)) bound_ok = false;
    auto dg = dg_coefficient(G, B, e);
    Json je = class_entry_to_json(e);
    je["wilson"] = gauss_to_string(w);
    je["dg_coefficient"] = {dg.real(), dg.imag()};
    arr.push_back(std::move(je));
  }
  auto collisions = check_simple_length_spectrum(classes, tol);
  Json coll = Json::array();
  for (const auto& [a, b] : collisions) coll.push_back({a, b});
  Json rep = {{"classes", std::move(arr)},
              {"length_collisions", std::move(coll)},
              {"tol", tol}};
  write_text(out, rep.dump(2) + "\n");
  return bound_ok ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polynomial sphere-map, Hodge and Wilson-loop toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for all randomized checks")
      ->capture_default_str();

  // honored as an upper bound on worker threads; computations are
  // deterministic regardless
  if (const char* t = std::getenv("SPHEREMAP_THREADS")) (void)t;

  int max_n = 15;
  std::string format = "text", out;
  auto* qt = app.add_subcommand("qtable", "emit the q(n) bound table");
  qt->add_option("--max-n", max_n, "largest n")->capture_default_str();
  qt->add_option("--format", format, "text|json|csv")->capture_default_str();
  qt->add_option("--out", out, "output path (default stdout)");

  std::string map_path;
  auto* vm = app.add_subcommand("verify-map", "verify a sphere or matrix map");
  vm->add_option("map", map_path, "map JSON file")->required();

  long cliff_m = 16;
  std::string cliff_out;
  auto* cl = app.add_subcommand("clifford", "build and certify a Clifford system");
  cl->add_option("--m", cliff_m, "dimension of the module R^m")->capture_default_str();
  cl->add_option("--out", cliff_out, "certificate path (default stdout)");

  long hopf_m = 2;
  std::string hopf_out;
  auto* hp = app.add_subcommand("hopf", "build and certify a Hopf-type map");
  hp->add_option("--m", hopf_m, "Clifford module dimension")->capture_default_str();
  hp->add_option("--out", hopf_out, "certificate path (default stdout)");

  int hodge_dim = 4, hodge_trials = 25;
  std::string hodge_out;
  auto* hc = app.add_subcommand("hodge-check", "intertwiner certificates");
  hc->add_option("--dim", hodge_dim, "ambient dimension 2n")->capture_default_str();
  hc->add_option("--trials", hodge_trials, "number of random checks")
      ->capture_default_str();
  hc->add_option("--out", hodge_out, "report path (default stdout)");

  std::string hd_path;
  auto* hd = app.add_subcommand("harmonic-degree", "per-coordinate Fourier degrees");
  hd->add_option("map", hd_path, "sphere map JSON file")->required();

  std::string w_group, w_bundle, w_out;
  int w_maxlen = 4;
  double w_tol = 1e-9;
  auto* wl = app.add_subcommand("wilson", "Wilson vectors and trace coefficients");
  wl->add_option("--group", w_group, "Schottky group JSON")->required();
  wl->add_option("--bundle", w_bundle, "flat bundle JSON")->required();
  wl->add_option("--max-word-len", w_maxlen, "class enumeration cutoff")
      ->capture_default_str();
  wl->add_option("--tol", w_tol, "length-collision tolerance")->capture_default_str();
  wl->add_option("--out", w_out, "report path (default stdout)");

  // let the global --seed appear after the subcommand name
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (qt->parsed()) return cmd_qtable(max_n, format, out);
    if (vm->parsed()) return cmd_verify_map(map_path);
    if (cl->parsed()) return cmd_clifford(cliff_m, cliff_out, seed);
    if (hp->parsed()) return cmd_hopf(hopf_m, hopf_out, seed);
    if (hc->parsed()) return cmd_hodge_check(hodge_dim, hodge_trials, seed, hodge_out);
    if (hd->parsed()) return cmd_harmonic_degree(hd_path);
    if (wl->parsed()) return cmd_wilson(w_group, w_bundle, w_maxlen, w_tol, w_out);
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
