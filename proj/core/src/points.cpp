#include "spherekit/points.hpp"

#include <stdexcept>

namespace spherekit {

Rat random_rat(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

std::vector<std::vector<Rat>> rational_sphere_points(int n, int count,
                                                     std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("rational_sphere_points: n >= 0 required");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rat>> pts;
  pts.reserve(std::size_t(std::max(count, 0)));
  for (int k = 0; k < count; ++k) {
    std::vector<Rat> t(n);
    Rat norm2(0);
    for (int i = 0; i < n; ++i) {
      t[i] = random_rat(rng);
      norm2 += t[i] * t[i];
    }
    Rat denom = norm2 + 1;
    std::vector<Rat> v(n + 1);
    for (int i = 0; i < n; ++i) v[i] = 2 * t[i] / denom;
    v[n] = (1 - norm2) / denom;
    pts.push_back(std::move(v));
  }
  return pts;
}

}  // namespace spherekit
