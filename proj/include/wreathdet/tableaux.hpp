#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wreathdet/errors.hpp"
#include "wreathdet/perm.hpp"
#include "wreathdet/polynomial.hpp"
#include "wreathdet/rational.hpp"

namespace wreathdet {

/// Integer partition; trailing zero parts are dropped on construction.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are nonnegative and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  /// (k^n): n rows of length k.
  static Partition rectangle(int n, int k);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int depth() const { return static_cast<int>(parts_.size()); }
  /// Row length i (0-based); 0 beyond the depth.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;
  bool dominates(const Partition& other) const;
  bool is_rectangle() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// All partitions of n with at most max_parts parts (no bound when negative),
/// in reverse lexicographic order: (n), (n-1, 1), ...
std::vector<Partition> partitions_of(int n, int max_parts = -1);

/// Standard tableau stored row by row; entries 1..N.
class StandardTableau {
 public:
  StandardTableau() = default;
  /// Throws std::invalid_argument unless rows form a standard filling of a
  /// partition shape.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  /// t_{ij}, 1-based.
  int entry(int i, int j) const { return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
  /// Entries of column j (1-based), top to bottom.
  std::vector<int> column(int j) const;
  std::vector<int> reading_word() const;

  auto operator<=>(const StandardTableau&) const = default;
  bool operator==(const StandardTableau&) const = default;
  std::string to_string() const;

 private:
  std::vector<std::vector<int>> rows_;
};

/// All standard tableaux of the shape, ordered lexicographically by row
/// reading word.
std::vector<StandardTableau> standard_tableaux(const Partition& shape, const Limits& limits = {});

/// f^lambda by the hook-length formula.
std::uint64_t hook_f(const Partition& shape);

/// Semistandard tableau with entries in 1..max_entry.
struct SemistandardTableau {
  std::vector<std::vector<int>> rows;
  std::vector<int> weight;  // weight[i] = number of entries equal to i+1
};

/// All SSYT of the shape with the given weight (a composition).
std::vector<SemistandardTableau> semistandard_tableaux(const Partition& shape, const std::vector<int>& weight);

/// K_{lambda, weight}; the weight may be any composition of |lambda|.
std::uint64_t kostka(const Partition& lambda, const std::vector<int>& weight);
std::uint64_t kostka(const Partition& lambda, const Partition& mu);

/// |SSTab_N(shape)|: semistandard tableaux with entries in 1..max_entry.
std::uint64_t count_semistandard(const Partition& shape, int max_entry);

/// prod over cells (i, j) of (1 + (j - i) alpha).
template <class R>
R content_polynomial(const Partition& lambda, const R& alpha) {
  R out(1);
  for (std::size_t i = 0; i < lambda.parts().size(); ++i)
    for (int j = 0; j < lambda.parts()[i]; ++j) out = out * (R(1) + R(j - static_cast<int>(i)) * alpha);
  return out;
}

/// Irreducible character chi^lambda at the class of the given cycle type.
long long mn_character(const Partition& lambda, const Partition& class_type);

/// Number of permutations of the given cycle type.
std::uint64_t class_size(const Partition& cycle_type);

/// g(T)((i-1)k+j) = t_ij for a tableau of rectangular shape (k^n).
Permutation g_of_T(const StandardTableau& tableau);

}  // namespace wreathdet
