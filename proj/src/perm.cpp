#include "wreathdet/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wreathdet {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    const auto& c = *it;
    for (std::size_t i = 0; i < c.size(); ++i) {
      images[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()];
    }
    result = Permutation(std::move(images)) * result;
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

int count_cycles(std::span<const int> images) {
  const std::size_t n = images.size();
  std::uint64_t small_seen = 0;
  std::vector<char> big_seen;
  const bool small = n <= 64;
  if (!small) big_seen.assign(n, 0);
  auto seen = [&](std::size_t i) { return small ? ((small_seen >> i) & 1U) != 0 : big_seen[i] != 0; };
  auto mark = [&](std::size_t i) {
    if (small) {
      small_seen |= (std::uint64_t{1} << i);
    } else {
      big_seen[i] = 1;
    }
  };
  int cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen(i)) continue;
    ++cycles;
    for (std::size_t j = i; !seen(j); j = static_cast<std::size_t>(images[j] - 1)) mark(j);
  }
  return cycles;
}

int Permutation::cycle_count() const { return count_cycles(images_); }

int Permutation::sign() const { return ((degree() - cycle_count()) % 2 == 0) ? 1 : -1; }

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw ShapeError("permutation degrees differ");
  Permutation p;
  p.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) p.images_[i] = a(b.images_[i]);
  return p;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

std::uint64_t factorial(int n) {
  if (n > 20) throw std::overflow_error("factorial does not fit in 64 bits");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t rank_of(const Permutation& p) {
  const int n = p.degree();
  std::uint64_t rank = 0;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int v = 1; v < p(i); ++v) smaller += used[static_cast<std::size_t>(v)] ? 0 : 1;
    rank += static_cast<std::uint64_t>(smaller) * factorial(n - i);
    used[static_cast<std::size_t>(p(i))] = 1;
  }
  return rank;
}

Permutation permutation_from_rank(int degree, std::uint64_t rank) {
  if (rank >= factorial(degree)) throw std::out_of_range("permutation rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(degree));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  images.reserve(pool.size());
  for (int i = degree; i >= 1; --i) {
    const std::uint64_t block = factorial(i - 1);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    images.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(images));
}

namespace {

void check_degree(int degree, const Limits& limits) {
  if (degree < 0) throw std::invalid_argument("negative permutation degree");
  if (degree > limits.max_degree) {
    throw CapExceeded("enumeration of S_" + std::to_string(degree) + " exceeds the degree cap",
                      static_cast<std::uint64_t>(degree), static_cast<std::uint64_t>(limits.max_degree));
  }
}

}  // namespace

void for_each_permutation(int degree, const std::function<void(const Permutation&)>& fn,
                          RankRange range, const Limits& limits) {
  check_degree(degree, limits);
  const std::uint64_t total = factorial(degree);
  const std::uint64_t last = std::min(range.last, total);
  if (range.first >= last) return;
  Permutation p = permutation_from_rank(degree, range.first);
  std::vector<int> images(p.images().begin(), p.images().end());
  for (std::uint64_t r = range.first; r < last; ++r) {
    fn(Permutation(images));
    std::next_permutation(images.begin(), images.end());
  }
}

std::vector<Permutation> enumerate_group(int degree, const Limits& limits) {
  check_degree(degree, limits);
  std::vector<Permutation> out;
  out.reserve(factorial(degree));
  for_each_permutation(degree, [&](const Permutation& p) { out.push_back(p); }, {}, limits);
  return out;
}

SupportSet SupportSet::from_mask(unsigned mask) {
  SupportSet s;
  for (int i = 0; i < 32; ++i) {
    if ((mask >> static_cast<unsigned>(i)) & 1U) s.members.push_back(i + 1);
  }
  return s;
}

std::vector<Permutation> support_subgroup(int degree, const SupportSet& support, const Limits& limits) {
  for (int m : support.members) {
    if (m < 1 || m > degree) throw std::invalid_argument("support label outside 1..N");
  }
  const int size = static_cast<int>(support.size());
  check_degree(size, limits);
  std::vector<Permutation> out;
  std::vector<int> arrangement = support.members;
  std::sort(arrangement.begin(), arrangement.end());
  do {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    for (int i = 0; i < size; ++i) {
      images[static_cast<std::size_t>(support.members[static_cast<std::size_t>(i)] - 1)] =
          arrangement[static_cast<std::size_t>(i)];
    }
    out.emplace_back(std::move(images));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return out;
}

Permutation block_embed(std::span<const Permutation> blocks) {
  if (blocks.empty()) return Permutation::identity(0);
  const int k = blocks.front().degree();
  std::vector<int> images;
  images.reserve(blocks.size() * static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].degree() != k) throw ShapeError("block permutations must share a degree");
    for (int j = 1; j <= k; ++j) images.push_back(static_cast<int>(i) * k + blocks[i](j));
  }
  return Permutation(std::move(images));
}

Permutation psi_embed(const Permutation& tau, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(tau.degree() * k));
  for (int i = 1; i <= tau.degree(); ++i) {
    for (int j = 1; j <= k; ++j) images.push_back((tau(i) - 1) * k + j);
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> young_subgroup_elements(int n, int k, const Limits& limits) {
  if (n < 1 || k < 1) throw std::invalid_argument("n and k must be positive");
  check_degree(k, limits);
  const std::uint64_t block_order = factorial(k);
  std::uint64_t order = 1;
  for (int i = 0; i < n; ++i) {
    if (order > limits.max_young_order / block_order) {
      throw CapExceeded("Young subgroup S_" + std::to_string(k) + "^" + std::to_string(n) +
                            " exceeds the order cap",
                        UINT64_MAX, limits.max_young_order);
    }
    order *= block_order;
  }
  if (order > limits.max_young_order) {
    throw CapExceeded("Young subgroup order exceeds the cap", order, limits.max_young_order);
  }
  const auto block = enumerate_group(k, limits);
  std::vector<Permutation> out;
  out.reserve(order);
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
  std::vector<int> images(static_cast<std::size_t>(n * k));
  for (std::uint64_t r = 0; r < order; ++r) {
    for (int i = 0; i < n; ++i) {
      const auto& b = block[digits[static_cast<std::size_t>(i)]];
      for (int j = 1; j <= k; ++j) images[static_cast<std::size_t>(i * k + j - 1)] = i * k + b(j);
    }
    out.emplace_back(images);
    for (int i = n - 1; i >= 0; --i) {
      if (++digits[static_cast<std::size_t>(i)] < block.size()) break;
      digits[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

std::vector<std::uint64_t> shifted_cycle_histogram(const Permutation& g, const SupportSet& support,
                                                   const Limits& limits) {
  std::vector<std::uint64_t> histogram(static_cast<std::size_t>(g.degree()) + 1, 0);
  for (const auto& w : support_subgroup(g.degree(), support, limits)) {
    ++histogram[static_cast<std::size_t>((g * w).cycle_count())];
  }
  return histogram;
}

}  // namespace wreathdet
