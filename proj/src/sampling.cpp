#include "wreathdet/sampling.hpp"

#include <set>

namespace wreathdet {

Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> magnitude(1, bound);
  const long num = magnitude(rng) * (rng() & 1U ? 1 : -1);
  return make_rational(Integer(num), Integer(magnitude(rng)));
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  RationalMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = random_rational(rng, bound);
  return a;
}

namespace {
bool distinct(const std::vector<Rational>& values) {
  return std::set<Rational>(values.begin(), values.end()).size() == values.size();
}

bool pole_free(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  for (const auto& a : x)
    for (const auto& b : y)
      if (a + b == 0 || a * b == 1) return false;
  return true;
}
}  // namespace

PointSample sample_points(std::size_t x_count, std::size_t y_count, std::uint64_t seed, long bound) {
  PointSample sample;
  for (std::uint64_t s = seed;; ++s) {
    std::mt19937_64 rng(s);
    sample.x.clear();
    sample.y.clear();
    for (std::size_t i = 0; i < x_count; ++i) sample.x.push_back(random_rational(rng, bound));
    for (std::size_t j = 0; j < y_count; ++j) sample.y.push_back(random_rational(rng, bound));
    if (distinct(sample.x) && distinct(sample.y) && pole_free(sample.x, sample.y)) {
      sample.seed = s;
      return sample;
    }
    ++sample.resamples;
  }
}

}  // namespace wreathdet
