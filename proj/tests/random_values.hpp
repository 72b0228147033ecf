#pragma once

#include "qharm/qpoly.hpp"
#include "qharm/qratfn.hpp"

#include <random>
#include <vector>

namespace qharm::testing {

inline BigRat random_rat(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return make_rat(num(rng), den(rng));
}

inline QPoly random_poly(std::mt19937_64& rng, int max_degree = 5, long bound = 9) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<BigRat> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_rat(rng, bound);
  return QPoly(std::move(c));
}

inline QPoly random_nonzero_poly(std::mt19937_64& rng, int max_degree = 5) {
  for (;;) {
    QPoly p = random_poly(rng, max_degree);
    if (!p.is_zero()) return p;
  }
}

inline QRatFn random_ratfn(std::mt19937_64& rng, int max_degree = 4) {
  return QRatFn(random_poly(rng, max_degree), random_nonzero_poly(rng, max_degree));
}

}  // namespace qharm::testing
