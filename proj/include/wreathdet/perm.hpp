#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wreathdet/errors.hpp"

namespace wreathdet {

/// Element of S_N in one-line notation over the labels 1..N.
/// Products compose as functions: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection of 1..N.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Product of the given cycles (each a list of labels), e.g. {{1, 2}}.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int label) const { return images_[static_cast<std::size_t>(label - 1)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  int cycle_count() const;
  int sign() const;
  /// Cycle lengths in weakly decreasing order (fixed points included).
  std::vector<int> cycle_type() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// nu_N: number of cycles of p, fixed points included.
inline int cycle_count(const Permutation& p) { return p.cycle_count(); }

/// Cycle count of a one-line image array with 1-based values.
int count_cycles(std::span<const int> images);

std::uint64_t factorial(int n);

/// Half-open range [first, last) of lexicographic ranks.
struct RankRange {
  std::uint64_t first = 0;
  std::uint64_t last = UINT64_MAX;
};

/// Lexicographic rank of p among all permutations of its degree.
std::uint64_t rank_of(const Permutation& p);
Permutation permutation_from_rank(int degree, std::uint64_t rank);

/// Calls fn(p) for every p in S_N with rank in `range`, in lexicographic order.
void for_each_permutation(int degree, const std::function<void(const Permutation&)>& fn,
                          RankRange range = {}, const Limits& limits = {});

/// All N! permutations in lexicographic order.
std::vector<Permutation> enumerate_group(int degree, const Limits& limits = {});

/// Subset I of [N]; S_N(I) fixes every label outside I.
struct SupportSet {
  std::vector<int> members;  // sorted, 1-based

  static SupportSet from_mask(unsigned mask);  // bit i <-> label i+1
  std::size_t size() const { return members.size(); }
};

/// Elements of S_N(I), lexicographic in one-line notation.
std::vector<Permutation> support_subgroup(int degree, const SupportSet& support,
                                          const Limits& limits = {});

/// phi(s_1, ..., s_n): (i-1)k+j -> (i-1)k + s_i(j), each s_i in S_k.
Permutation block_embed(std::span<const Permutation> blocks);

/// psi(tau): (i-1)k+j -> (tau(i)-1)k+j.
Permutation psi_embed(const Permutation& tau, int k);

/// The Young subgroup S_k^n inside S_{kn}: (k!)^n elements preserving each
/// block {(i-1)k+1, ..., ik}. Ordered lexicographically by (s_1, ..., s_n).
std::vector<Permutation> young_subgroup_elements(int n, int k, const Limits& limits = {});

/// Result of sum_{w in S_N(I)} alpha^{N - nu(g w)} together with the exponent
/// m(g, I) = N - max_w nu(g w).
template <class R>
struct ShiftedCycleSum {
  R value;
  int m = 0;
};

/// Histogram h[c] = #{w in S_N(I) : nu(g w) = c}, c = 0..N.
std::vector<std::uint64_t> shifted_cycle_histogram(const Permutation& g, const SupportSet& support,
                                                   const Limits& limits = {});

template <class R>
ShiftedCycleSum<R> shifted_cycle_sum(const Permutation& g, const SupportSet& support,
                                     const R& alpha, const Limits& limits = {}) {
  const auto histogram = shifted_cycle_histogram(g, support, limits);
  const int n = g.degree();
  ShiftedCycleSum<R> out{R(0), 0};
  int max_cycles = -1;
  R alpha_power(1);
  // Walk c from N downward so alpha_power = alpha^{N - c}.
  for (int c = n; c >= 0; --c) {
    const auto count = histogram[static_cast<std::size_t>(c)];
    if (count != 0) {
      if (max_cycles < 0) max_cycles = c;
      out.value += R(static_cast<int>(count)) * alpha_power;
    }
    alpha_power *= alpha;
  }
  out.m = n - max_cycles;
  return out;
}

}  // namespace wreathdet
