#include "spherekit/wilson.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "spherekit/points.hpp"

namespace spherekit {

RatMat2 mat2_mul(const RatMat2& x, const RatMat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

void validate_schottky(const SchottkyGroup& G) {
  if (G.rank() < 1) throw std::invalid_argument("schottky: no generators");
  for (const auto& g : G.generators) {
    if (g.det() != 1) throw std::invalid_argument("schottky: determinant != 1");
    Rat t = g.trace();
    if (abs(t) <= 2) throw std::invalid_argument("schottky: generator not hyperbolic");
  }
}

namespace {

bool cancels(int a, int b) { return a == -b; }

Word cyclic_reduce(Word w) {
  // inner reduction
  Word out;
  for (int x : w) {
    if (x == 0) throw std::invalid_argument("word: zero letter");
    if (!out.empty() && cancels(out.back(), x)) out.pop_back();
    else out.push_back(x);
  }
  // wraparound reduction
  while (out.size() >= 2 && cancels(out.front(), out.back())) {
    out.erase(out.begin());
    out.pop_back();
  }
  return out;
}

}  // namespace

Word canonical_class(const Word& w) {
  Word r = cyclic_reduce(w);
  if (r.empty()) return r;
  Word best = r;
  Word rot = r;
  for (std::size_t k = 1; k < r.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

Word inverse_word(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

Word primitive_root(const Word& w) {
  std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i)
      if (w[i] != w[i - d]) periodic = false;
    if (periodic) return Word(w.begin(), w.begin() + d);
  }
  return w;
}

std::vector<ClassEntry> enumerate_classes(const SchottkyGroup& G, int max_len) {
  if (max_len < 1) throw std::invalid_argument("enumerate_classes: max_len >= 1");
  validate_schottky(G);
  int g = G.rank();
  std::vector<int> letters;
  for (int i = 1; i <= g; ++i) {
    letters.push_back(i);
    letters.push_back(-i);
  }
  std::set<Word> seen;
  Word cur;
  // depth-first over reduced words (no adjacent inverse pairs)
  auto dfs = [&](auto&& self, int remaining) -> void {
    if (!cur.empty() && !cancels(cur.front(), cur.back()))
      seen.insert(canonical_class(cur));
    if (remaining == 0) return;
    for (int l : letters) {
      if (!cur.empty() && cancels(cur.back(), l)) continue;
      cur.push_back(l);
      self(self, remaining - 1);
      cur.pop_back();
    }
  };
  dfs(dfs, max_len);

  std::vector<ClassEntry> out;
  out.reserve(seen.size());
  for (const Word& w : seen) {
    ClassEntry e;
    e.word = w;
    e.primitive = (primitive_root(w).size() == w.size());
    e.length = geodesic_length(G, w);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const ClassEntry& a, const ClassEntry& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });
  return out;
}

RatMat2 word_matrix(const SchottkyGroup& G, const Word& w) {
  RatMat2 m{1, 0, 0, 1};
  for (int l : w) {
    if (l == 0 || std::abs(l) > G.rank())
      throw std::out_of_range("word_matrix: letter out of range");
    const RatMat2& gen = G.generators[std::abs(l) - 1];
    m = mat2_mul(m, l > 0 ? gen : gen.inverse_sl2());
  }
  return m;
}

double geodesic_length(const SchottkyGroup& G, const Word& w) {
  if (w.empty()) throw std::invalid_argument("geodesic_length: empty word");
  Rat t = abs(word_matrix(G, w).trace());
  if (t <= 2) throw std::domain_error("geodesic_length: class is not hyperbolic");
  double half = t.get_d() / 2.0;
  return 2.0 * std::acosh(half);
}

void validate_bundle(const FlatBundle& B, int group_rank) {
  if (int(B.images.size()) != group_rank)
    throw std::invalid_argument("bundle: one image per generator required");
  for (const auto& U : B.images) {
    if (int(U.size()) != B.rank) throw std::invalid_argument("bundle: rank mismatch");
    for (const auto& row : U)
      if (int(row.size()) != B.rank)
        throw std::invalid_argument("bundle: non-square image");
    if (!mat_is_unitary(U)) throw std::invalid_argument("bundle: image not unitary");
  }
}

CMat mat_mul(const CMat& x, const CMat& y) {
  std::size_t n = x.size(), p = y.size(), q = y.empty() ? 0 : y[0].size();
  CMat r(n, std::vector<GaussRat>(q));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < p; ++k) {
      const GaussRat& xik = x[i][k];
      if (xik.re == 0 && xik.im == 0) continue;
      for (std::size_t j = 0; j < q; ++j) r[i][j] += xik * y[k][j];
    }
  return r;
}

CMat mat_conj_transpose(const CMat& x) {
  std::size_t n = x.size(), m = x.empty() ? 0 : x[0].size();
  CMat r(m, std::vector<GaussRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) r[j][i] = x[i][j].conj();
  return r;
}

GaussRat mat_trace(const CMat& x) {
  GaussRat t;
  for (std::size_t i = 0; i < x.size(); ++i) t += x[i][i];
  return t;
}

bool mat_is_unitary(const CMat& x) {
  CMat p = mat_mul(mat_conj_transpose(x), x);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      GaussRat expect(Rat(i == j ? 1 : 0));
      if (!(p[i][j] == expect)) return false;
    }
  return true;
}

CMat holonomy(const FlatBundle& B, const Word& w) {
  CMat m(B.rank, std::vector<GaussRat>(B.rank));
  for (int i = 0; i < B.rank; ++i) m[i][i] = GaussRat(Rat(1));
  for (int l : w) {
    if (l == 0 || std::abs(l) > int(B.images.size()))
      throw std::out_of_range("holonomy: letter out of range");
    const CMat& U = B.images[std::abs(l) - 1];
    m = mat_mul(m, l > 0 ? U : mat_conj_transpose(U));
  }
  return m;
}

GaussRat wilson_loop(const FlatBundle& B, const Word& w) {
  return mat_trace(holonomy(B, w));
}

std::vector<GaussRat> wilson_vector(const FlatBundle& B,
                                    const std::vector<ClassEntry>& classes) {
  std::vector<GaussRat> out;
  out.reserve(classes.size());
  for (const auto& e : classes) out.push_back(wilson_loop(B, e.word));
  return out;
}

std::complex<double> dg_coefficient(const SchottkyGroup& G, const FlatBundle& B,
                                    const ClassEntry& entry) {
  double ell = entry.length;
  if (!(ell > 0)) throw std::domain_error("dg_coefficient: zero length");
  double ell_prim =
      entry.primitive ? ell : geodesic_length(G, primitive_root(entry.word));
  GaussRat w = wilson_loop(B, entry.word);
  std::complex<double> tr(w.re.get_d(), w.im.get_d());
  const double pi = std::acos(-1.0);
  return ell_prim * tr / (2.0 * pi * 2.0 * std::sinh(ell / 2.0));
}

std::vector<std::pair<std::size_t, std::size_t>> check_simple_length_spectrum(
    const std::vector<ClassEntry>& classes, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("check_simple_length_spectrum: tol > 0");
  // sort indices by length; collisions can only be adjacent in that order
  std::vector<std::size_t> idx(classes.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return classes[a].length < classes[b].length;
  });
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (classes[idx[j]].length - classes[idx[i]].length >= tol) break;
      std::size_t a = std::min(idx[i], idx[j]), b = std::max(idx[i], idx[j]);
      // w and w^-1 always share a length; that pair is not a violation
      if (canonical_class(inverse_word(classes[a].word)) == classes[b].word)
        continue;
      out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FlatBundle gauge_conjugate(const FlatBundle& B, const CMat& U) {
  if (int(U.size()) != B.rank)
    throw std::invalid_argument("gauge_conjugate: size mismatch");
  if (!mat_is_unitary(U))
    throw std::invalid_argument("gauge_conjugate: U not unitary");
  FlatBundle out;
  out.rank = B.rank;
  CMat Uinv = mat_conj_transpose(U);
  for (const auto& img : B.images)
    out.images.push_back(mat_mul(Uinv, mat_mul(img, U)));
  return out;
}

namespace {

// exact unit-modulus Gaussian rational ((1 - t^2) + 2 t i) / (1 + t^2)
GaussRat unit_phase(std::mt19937_64& rng) {
  Rat t = random_rat(rng, 5);
  Rat d = 1 + t * t;
  return GaussRat((1 - t * t) / d, 2 * t / d);
}

}  // namespace

CMat random_unitary(int rank, std::mt19937_64& rng) {
  if (rank < 1) throw std::invalid_argument("random_unitary: rank >= 1");
  CMat U(rank, std::vector<GaussRat>(rank));
  for (int i = 0; i < rank; ++i) U[i][i] = unit_phase(rng);
  for (int i = 0; i + 1 < rank; ++i) {
    // rational Givens rotation in the (i, i+1) plane
    Rat t = random_rat(rng, 5);
    Rat d = 1 + t * t;
    Rat c = (1 - t * t) / d, s = 2 * t / d;
    CMat R(rank, std::vector<GaussRat>(rank));
    for (int k = 0; k < rank; ++k) R[k][k] = GaussRat(Rat(1));
    R[i][i] = GaussRat(c);
    R[i][i + 1] = GaussRat(s);
    R[i + 1][i] = GaussRat(-s);
    R[i + 1][i + 1] = GaussRat(c);
    U = mat_mul(U, R);
    CMat P(rank, std::vector<GaussRat>(rank));
    for (int k = 0; k < rank; ++k) P[k][k] = GaussRat(Rat(1));
    P[i][i] = unit_phase(rng);
    U = mat_mul(U, P);
  }
  return U;
}

}  // namespace spherekit
