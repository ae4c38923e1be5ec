#pragma once

#include <cmath>
#include <random>

#include "spincorr/model.hpp"

namespace spincorr::test {

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
  return std::exp(d(rng));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline EffectiveParams random_params(std::mt19937_64& rng, double jz_lo, double jz_hi, double r_max) {
  return {uniform(rng, jz_lo, jz_hi), uniform(rng, 0, r_max), uniform(rng, 0, r_max)};
}

}  // namespace spincorr::test
