#include "spherekit/json_io.hpp"

#include <stdexcept>

namespace spherekit {

namespace {

template <typename K>
Json poly_to_json_impl(const MultiPoly<K>& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.sorted_terms()) {
    Json exps = Json::array();
    for (int i = 0; i < p.nvars(); ++i) exps.push_back(m.get(i));
    terms.push_back({{"exps", std::move(exps)}, {"coeff", FieldOps<K>::str(c)}});
  }
  return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

template <typename K>
MultiPoly<K> poly_from_json_impl(const Json& j) {
  int nvars = j.at("nvars").get<int>();
  MultiPoly<K> p(nvars);
  for (const auto& t : j.at("terms")) {
    const auto& exps = t.at("exps");
    if (int(exps.size()) != nvars)
      throw std::invalid_argument("poly json: exponent arity mismatch");
    Mono m(nvars);
    for (int i = 0; i < nvars; ++i) m.set(i, exps[i].get<unsigned>());
    p.add_term(m, FieldOps<K>::parse(t.at("coeff").template get<std::string>()));
  }
  return p;
}

}  // namespace

Json poly_to_json(const Poly& p) { return poly_to_json_impl(p); }
Json poly_to_json(const CPoly& p) { return poly_to_json_impl(p); }
Poly poly_from_json(const Json& j) { return poly_from_json_impl<Rat>(j); }
CPoly cpoly_from_json(const Json& j) { return poly_from_json_impl<GaussRat>(j); }

Json sphere_map_to_json(const SphereMap& F) {
  Json coords = Json::array();
  for (const auto& c : F.coords) coords.push_back(poly_to_json(c));
  return {{"source_dim", F.source_dim},
          {"target_dim", F.target_dim},
          {"coords", std::move(coords)}};
}

SphereMap sphere_map_from_json(const Json& j) {
  SphereMap F;
  F.source_dim = j.at("source_dim").get<int>();
  F.target_dim = j.at("target_dim").get<int>();
  for (const auto& c : j.at("coords")) F.coords.push_back(poly_from_json(c));
  return F;
}

Json matrix_map_to_json(const MatrixPolyMap& M) {
  Json entries = Json::array();
  for (const auto& e : M.entries) entries.push_back(poly_to_json(e));
  return {{"source_dim", M.source_dim},
          {"size", M.size},
          {"group", group_tag_name(M.group)},
          {"entries", std::move(entries)}};
}

MatrixPolyMap matrix_map_from_json(const Json& j) {
  MatrixPolyMap M;
  M.source_dim = j.at("source_dim").get<int>();
  M.size = j.at("size").get<int>();
  M.group = group_tag_from_name(j.at("group").get<std::string>());
  for (const auto& e : j.at("entries")) M.entries.push_back(cpoly_from_json(e));
  if (int(M.entries.size()) != M.size * M.size)
    throw std::invalid_argument("matrix map json: entry count");
  return M;
}

Json clifford_to_json(const CliffordSystem& cs) {
  Json structures = Json::array();
  for (const auto& J : cs.structures) {
    Json flat = Json::array();
    for (const auto& row : J)
      for (int x : row) flat.push_back(x);
    structures.push_back(std::move(flat));
  }
  return {{"dim", cs.dim}, {"structures", std::move(structures)}};
}

CliffordSystem clifford_from_json(const Json& j) {
  CliffordSystem cs;
  cs.dim = j.at("dim").get<int>();
  for (const auto& flat : j.at("structures")) {
    if (int(flat.size()) != cs.dim * cs.dim)
      throw std::invalid_argument("clifford json: structure size");
    IntMat J(cs.dim, std::vector<int>(cs.dim));
    for (int i = 0; i < cs.dim; ++i)
      for (int k = 0; k < cs.dim; ++k) J[i][k] = flat[i * cs.dim + k].get<int>();
    cs.structures.push_back(std::move(J));
  }
  return cs;
}

Json normed_bilinear_to_json(const NormedBilinear& F) {
  Json tensor = Json::array();
  for (int k = 0; k < F.t; ++k) {
    Json plane = Json::array();
    for (int i = 0; i < F.r; ++i) {
      Json row = Json::array();
      for (int j = 0; j < F.s; ++j) row.push_back(rat_to_string(F.tensor[k][i][j]));
      plane.push_back(std::move(row));
    }
    tensor.push_back(std::move(plane));
  }
  return {{"r", F.r}, {"s", F.s}, {"t", F.t}, {"tensor", std::move(tensor)}};
}

NormedBilinear normed_bilinear_from_json(const Json& j) {
  NormedBilinear F;
  F.r = j.at("r").get<int>();
  F.s = j.at("s").get<int>();
  F.t = j.at("t").get<int>();
  const auto& tensor = j.at("tensor");
  if (int(tensor.size()) != F.t)
    throw std::invalid_argument("normed bilinear json: tensor shape");
  F.tensor.assign(F.t, std::vector<std::vector<Rat>>(F.r, std::vector<Rat>(F.s)));
  for (int k = 0; k < F.t; ++k)
    for (int i = 0; i < F.r; ++i)
      for (int l = 0; l < F.s; ++l)
        F.tensor[k][i][l] = parse_rat(tensor[k][i][l].get<std::string>());
  return F;
}

Json schottky_to_json(const SchottkyGroup& G) {
  Json gens = Json::array();
  for (const auto& g : G.generators)
    gens.push_back({rat_to_string(g.a), rat_to_string(g.b), rat_to_string(g.c),
                    rat_to_string(g.d)});
  return {{"generators", std::move(gens)}};
}

SchottkyGroup schottky_from_json(const Json& j) {
  SchottkyGroup G;
  for (const auto& g : j.at("generators")) {
    if (g.size() != 4)
      throw std::invalid_argument("schottky json: generator needs 4 entries");
    G.generators.push_back({parse_rat(g[0].get<std::string>()),
                            parse_rat(g[1].get<std::string>()),
                            parse_rat(g[2].get<std::string>()),
                            parse_rat(g[3].get<std::string>())});
  }
  return G;
}

Json bundle_to_json(const FlatBundle& B) {
  Json images = Json::array();
  for (const auto& U : B.images) {
    Json mat = Json::array();
    for (const auto& row : U) {
      Json r = Json::array();
      for (const auto& z : row) r.push_back(gauss_to_string(z));
      mat.push_back(std::move(r));
    }
    images.push_back(std::move(mat));
  }
  return {{"rank", B.rank}, {"images", std::move(images)}};
}

FlatBundle bundle_from_json(const Json& j) {
  FlatBundle B;
  B.rank = j.at("rank").get<int>();
  for (const auto& mat : j.at("images")) {
    CMat U;
    for (const auto& row : mat) {
      std::vector<GaussRat> r;
      for (const auto& z : row) r.push_back(parse_gauss(z.get<std::string>()));
      U.push_back(std::move(r));
    }
    B.images.push_back(std::move(U));
  }
  return B;
}

Json class_entry_to_json(const ClassEntry& e) {
  Json word = Json::array();
  for (int l : e.word) word.push_back(l);
  return {{"word", std::move(word)},
          {"primitive", e.primitive},
          {"length", e.length}};
}

}  // namespace spherekit
