#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wreathdet/matrix.hpp"
#include "wreathdet/rational.hpp"

namespace wreathdet {

/// |numerator| and denominator uniform in [1, bound], random sign.
Rational random_rational(std::mt19937_64& rng, long bound = 1'000'000);
RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound = 1'000'000);

struct PointSample {
  std::vector<Rational> x;
  std::vector<Rational> y;
  std::uint64_t seed = 0;    // seed that produced the accepted sample
  int resamples = 0;         // rejected draws before it
};

/// Distinct x (kn values) and distinct y (n values) with every x_i + y_j and
/// 1 - x_i y_j nonzero. A rejected draw moves on to seed + 1.
PointSample sample_points(std::size_t x_count, std::size_t y_count, std::uint64_t seed, long bound = 50);

}  // namespace wreathdet
