#include "spherekit/bounds.hpp"

#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "spherekit/points.hpp"

namespace spherekit {

namespace {

int largest_pow2_leq(int n) {
  int p = 1;
  while (2 * p <= n) p *= 2;
  return p;
}

bool range_has_pow2(int lo, int hi) {
  for (int p = 1; p <= hi; p *= 2)
    if (p >= lo) return true;
  return false;
}

// Cheap non-constancy test: evaluate at a few exact sphere points and look
// for two distinct images; fall back to the NF criterion only when all
// samples agree.
bool nonconstant(const SphereMap& F) {
  auto pts = rational_sphere_points(F.source_dim, 4, 1234);
  std::vector<Rat> first = eval_map(F, pts[0]);
  for (std::size_t k = 1; k < pts.size(); ++k)
    if (eval_map(F, pts[k]) != first) return true;
  return !is_constant(F);
}

// Witness cache: non-constant verified maps S^n -> S^{2^floor(log2 n)} for
// n in [2, 47]. Block tops are Hopf maps (quadratic) where one exists with
// the right source dimension, and the degree-4 composition chains otherwise;
// smaller n are reached by restricting to great spheres, choosing the zeroed
// coordinate so the restriction stays non-constant.
class WitnessCache {
 public:
  std::shared_ptr<const SphereMap> get(int n) {
    std::scoped_lock lock(mu_);
    return get_locked(n);
  }

 private:
  std::shared_ptr<const SphereMap> get_locked(int n) {
    if (n < 2 || n > 47) return nullptr;
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;

    SphereMap w;
    if (n == top_for(n)) {
      w = block_top(n);
    } else {
      std::shared_ptr<const SphereMap> up = get_locked(n + 1);
      bool found = false;
      for (int i = n + 2; i >= 1 && !found; --i) {
        SphereMap cand = restrict_to_great_sphere(*up, i);
        if (nonconstant(cand)) {
          w = std::move(cand);
          found = true;
        }
      }
      if (!found)
        throw std::logic_error("witness restriction degenerated to a constant");
    }
    auto sp = std::make_shared<const SphereMap>(std::move(w));
    cache_.emplace(n, sp);
    return sp;
  }

  static int top_for(int n) {
    // block [2^k, 2^{k+1}-1]; tops are the largest source dimension reached
    // by a single Hopf map, then the chain top for the rest of the block
    if (n <= 3) return 3;
    if (n <= 7) return 7;
    if (n <= 15) return 15;
    if (n <= 24) return 24;  // Hopf S^24 -> S^16
    if (n <= 31) return 31;  // chain S^31 -> S^16
    if (n <= 41) return 41;  // Hopf S^41 -> S^32
    return 47;               // chain S^47 -> S^32
  }

  static SphereMap block_top(int n) {
    switch (n) {
      case 3:
        return hopf_construction(normed_bilinear_from_clifford(clifford_system(2)));
      case 7:
        return hopf_construction(normed_bilinear_from_clifford(clifford_system(4)));
      case 15:
        return hopf_construction(normed_bilinear_from_clifford(clifford_system(8)));
      case 24:
        return hopf_construction(normed_bilinear_from_clifford(clifford_system(16)));
      case 31:
        return chain_witness(ChainName::S31_to_S16);
      case 41:
        return hopf_construction(normed_bilinear_from_clifford(clifford_system(32)));
      case 47:
        return chain_witness(ChainName::S47_to_S32);
    }
    throw std::logic_error("block_top: not a block top");
  }

  std::mutex mu_;
  std::map<int, std::shared_ptr<const SphereMap>> cache_;
};

WitnessCache& witness_cache() {
  static WitnessCache c;
  return c;
}

}  // namespace

bool wood_obstruction(int n, int r) {
  if (r < 1 || r > n - 1)
    throw std::out_of_range("wood_obstruction: need 1 <= r <= n-1");
  return range_has_pow2(r + 1, n);
}

QBound q_bounds(int n) {
  if (n < 1) throw std::invalid_argument("q_bounds: n >= 1 required");
  QBound b;
  b.n = n;
  if (n == 1) {
    // degree-2 angle doubling S^1 -> S^1
    b.lower = b.upper = 1;
    b.exact = true;
    b.witness = std::make_shared<const SphereMap>(
        hopf_construction(normed_bilinear_from_clifford(clifford_system(1))));
    b.provenance = {"witness"};
    return b;
  }
  int p = largest_pow2_leq(n);
  // no non-constant map below the last power of 2 in range: q(n) >= p
  b.lower = p;
  b.provenance.push_back("wood");
  b.provenance.push_back("even");

  if (n <= 47) {
    b.witness = witness_cache().get(n);
    b.upper = p;  // all witnesses land in S^{2^k}
    b.provenance.push_back("witness");
  } else {
    // n >= 48: no chain witness is known below the identity map; report an
    // honest interval (exact again only when n is itself a power of 2).
    b.upper = n;
    b.witness = std::make_shared<const SphereMap>(SphereMap::identity(n));
    b.provenance.push_back("identity");
  }
  b.exact = (b.lower == b.upper);
  return b;
}

QBound q_group(int n, TargetSpace target, int k) {
  if (n < 2) throw std::invalid_argument("q_group: n >= 2 required");
  QBound q = q_bounds(n);
  QBound g;
  g.n = n;
  g.exact = q.exact;
  g.provenance = q.provenance;
  auto apply = [&](int v) {
    switch (target) {
      case TargetSpace::SO: return 1 + v;
      case TargetSpace::U:
      case TargetSpace::SU: return 1 + v / 2;
      case TargetSpace::GrR: return 1 + std::max(k, v);
      case TargetSpace::GrC: return 1 + std::max(k, v / 2);
    }
    throw std::logic_error("q_group: unknown target");
  };
  g.lower = apply(q.lower);
  g.upper = apply(q.upper);
  g.exact = (g.lower == g.upper);
  return g;
}

namespace {

long m_real(long q) {  // floor((1 + sqrt(1+8q)) / 2)
  return (1 + isqrt_floor(1 + 8 * q)) / 2;
}

}  // namespace

IntRange m_bound(int n, bool complex_field) {
  if (n < 2) throw std::invalid_argument("m_bound: n >= 2 required");
  QBound q = q_bounds(n);
  IntRange r;
  if (complex_field) {
    r.lo = isqrt_floor(q.lower);
    r.hi = isqrt_floor(q.upper);
  } else {
    r.lo = m_real(q.lower);
    r.hi = m_real(q.upper);
  }
  r.exact = (r.lo == r.hi);
  return r;
}

std::string emit_table(int max_n, TableFormat format) {
  if (max_n < 2) throw std::invalid_argument("emit_table: max_n >= 2 required");
  std::ostringstream os;
  if (format == TableFormat::Text)
    os << "   n  q_lo  q_hi exact  q_SO   q_U   m_R   m_C  provenance\n";
  else if (format == TableFormat::Csv)
    os << "n,q_lower,q_upper,exact,q_so,q_u,m_r,m_c,provenance\n";
  else
    os << "[\n";
  for (int n = 2; n <= max_n; ++n) {
    QBound q = q_bounds(n);
    QBound so = q_group(n, TargetSpace::SO);
    QBound u = q_group(n, TargetSpace::U);
    IntRange mr = m_bound(n, false);
    IntRange mc = m_bound(n, true);
    auto rng = [](int lo, int hi) {
      return lo == hi ? std::to_string(lo)
                      : std::to_string(lo) + ".." + std::to_string(hi);
    };
    std::string prov;
    for (std::size_t i = 0; i < q.provenance.size(); ++i)
      prov += (i ? "+" : "") + q.provenance[i];
    if (format == TableFormat::Text) {
      os << std::setw(4) << n << "  " << std::setw(4) << q.lower << "  "
         << std::setw(4) << q.upper << "  " << std::setw(4)
         << (q.exact ? "yes" : "no") << "  " << std::setw(4)
         << rng(so.lower, so.upper) << "  " << std::setw(4)
         << rng(u.lower, u.upper) << "  " << std::setw(4) << rng(mr.lo, mr.hi)
         << "  " << std::setw(4) << rng(mc.lo, mc.hi) << "  " << prov << "\n";
    } else if (format == TableFormat::Csv) {
      os << n << ',' << q.lower << ',' << q.upper << ','
         << (q.exact ? "true" : "false") << ',' << rng(so.lower, so.upper)
         << ',' << rng(u.lower, u.upper) << ',' << rng(mr.lo, mr.hi) << ','
         << rng(mc.lo, mc.hi) << ',' << prov << "\n";
    } else {
      os << "  {\"n\": " << n << ", \"q_lower\": " << q.lower
         << ", \"q_upper\": " << q.upper
         << ", \"exact\": " << (q.exact ? "true" : "false")
         << ", \"q_so_lower\": " << so.lower << ", \"q_so_upper\": " << so.upper
         << ", \"q_u_lower\": " << u.lower << ", \"q_u_upper\": " << u.upper
         << ", \"m_r_lower\": " << mr.lo << ", \"m_r_upper\": " << mr.hi
         << ", \"m_c_lower\": " << mc.lo << ", \"m_c_upper\": " << mc.hi
         << ", \"witness_id\": \"" << (q.witness ? ("S" + std::to_string(n) +
                                                    "_to_S" +
                                                    std::to_string(q.upper))
                                                 : "")
         << "\", \"provenance\": [";
      for (std::size_t i = 0; i < q.provenance.size(); ++i)
        os << (i ? ", " : "") << '"' << q.provenance[i] << '"';
      os << "]}" << (n == max_n ? "\n" : ",\n");
    }
  }
  if (format == TableFormat::Json) os << "]\n";
  return os.str();
}

}  // namespace spherekit
