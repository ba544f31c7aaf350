#include "wreathdet/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wreathdet {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw std::invalid_argument("partition parts must be weakly decreasing and nonnegative");
    }
  }
}

Partition Partition::rectangle(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("rectangle sides must be nonnegative");
  return Partition(std::vector<int>(static_cast<std::size_t>(k == 0 ? 0 : n), k));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(parts_.empty() ? 0 : parts_.front()), 0);
  for (int part : parts_)
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(out);
}

bool Partition::dominates(const Partition& other) const {
  if (size() != other.size()) return false;
  int mine = 0, theirs = 0;
  const std::size_t depth = std::max(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < depth; ++i) {
    mine += (*this)[i];
    theirs += other[i];
    if (mine < theirs) return false;
  }
  return true;
}

bool Partition::is_rectangle() const {
  return std::all_of(parts_.begin(), parts_.end(), [&](int p) { return p == parts_.front(); });
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

std::vector<Partition> partitions_of(int n, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> build = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (max_parts >= 0 && static_cast<int>(current.size()) == max_parts) return;
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      build(remaining - part, part);
      current.pop_back();
    }
  };
  build(n, n);
  return out;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> lengths;
  for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
  Partition shape_check(lengths);
  if (shape_check.depth() != static_cast<int>(rows_.size())) throw std::invalid_argument("empty tableau row");
  const int n = shape_check.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      const int v = rows_[i][j];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("tableau entries must be 1..N once each");
      seen[static_cast<std::size_t>(v)] = true;
      if (j > 0 && rows_[i][j - 1] >= v) throw std::invalid_argument("tableau rows must increase");
      if (i > 0 && rows_[i - 1][j] >= v) throw std::invalid_argument("tableau columns must increase");
    }
  }
}

Partition StandardTableau::shape() const {
  std::vector<int> lengths;
  for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
  return Partition(lengths);
}

int StandardTableau::size() const { return shape().size(); }

std::vector<int> StandardTableau::column(int j) const {
  std::vector<int> out;
  for (const auto& row : rows_)
    if (static_cast<int>(row.size()) >= j) out.push_back(row[static_cast<std::size_t>(j - 1)]);
  return out;
}

std::vector<int> StandardTableau::reading_word() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::string StandardTableau::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    os << (i ? "/" : "");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) os << (j ? " " : "") << rows_[i][j];
  }
  return os.str();
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape, const Limits& limits) {
  const int n = shape.size();
  if (n > limits.max_tableau_size) {
    throw CapExceeded("standard tableaux size", static_cast<std::uint64_t>(n),
                      static_cast<std::uint64_t>(limits.max_tableau_size));
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.depth()));
  std::vector<StandardTableau> out;
  std::function<void(int)> place = [&](int next) {
    if (next > n) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto len = rows[i].size();
      if (static_cast<int>(len) >= shape[i]) continue;
      if (i > 0 && rows[i - 1].size() <= len) continue;
      rows[i].push_back(next);
      place(next + 1);
      rows[i].pop_back();
    }
  };
  place(1);
  std::sort(out.begin(), out.end(),
            [](const StandardTableau& a, const StandardTableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

std::uint64_t hook_f(const Partition& shape) {
  const auto conj = shape.conjugate();
  Integer hooks = 1;
  for (std::size_t i = 0; i < shape.parts().size(); ++i)
    for (int j = 0; j < shape.parts()[i]; ++j)
      hooks *= (shape.parts()[i] - j) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i)) - 1;
  const Integer f = factorial_integer(static_cast<unsigned>(shape.size())) / hooks;
  return f.get_ui();
}

namespace {

// Fills letters one at a time; letter `letter` occupies a horizontal strip
// added to the current shape. `visit` sees every completed filling.
void fill_strips(const Partition& target, const std::vector<int>& weight, std::vector<std::vector<int>>& rows,
                 std::size_t letter, const std::function<void()>& visit) {
  if (letter == weight.size()) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(rows[i].size()) != target[i]) return;
    visit();
    return;
  }
  // Choose how many copies of the letter go into each row, bottom row first;
  // a horizontal strip may not extend a row beyond the row above's old length.
  const std::size_t depth = rows.size();
  std::vector<int> old_len(depth);
  for (std::size_t i = 0; i < depth; ++i) old_len[i] = static_cast<int>(rows[i].size());
  std::function<void(std::size_t, int)> distribute = [&](std::size_t row, int remaining) {
    if (row == depth) {
      if (remaining == 0) fill_strips(target, weight, rows, letter + 1, visit);
      return;
    }
    const int ceiling = row == 0 ? target[0] : std::min(target[row], old_len[row - 1]);
    const int room = std::max(0, ceiling - old_len[row]);
    for (int take = std::min(room, remaining); take >= 0; --take) {
      for (int t = 0; t < take; ++t) rows[row].push_back(static_cast<int>(letter) + 1);
      distribute(row + 1, remaining - take);
      for (int t = 0; t < take; ++t) rows[row].pop_back();
    }
  };
  distribute(0, weight[letter]);
}

}  // namespace

std::vector<SemistandardTableau> semistandard_tableaux(const Partition& shape, const std::vector<int>& weight) {
  if (std::accumulate(weight.begin(), weight.end(), 0) != shape.size()) throw ShapeError("weight size differs from shape size");
  if (std::any_of(weight.begin(), weight.end(), [](int w) { return w < 0; })) throw std::invalid_argument("negative weight");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.depth()));
  std::vector<SemistandardTableau> out;
  fill_strips(shape, weight, rows, 0, [&] { out.push_back({rows, weight}); });
  return out;
}

std::uint64_t kostka(const Partition& lambda, const std::vector<int>& weight) {
  if (std::accumulate(weight.begin(), weight.end(), 0) != lambda.size()) throw ShapeError("weight size differs from shape size");
  if (std::any_of(weight.begin(), weight.end(), [](int w) { return w < 0; })) throw std::invalid_argument("negative weight");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.depth()));
  std::uint64_t count = 0;
  fill_strips(lambda, weight, rows, 0, [&] { ++count; });
  return count;
}

std::uint64_t kostka(const Partition& lambda, const Partition& mu) { return kostka(lambda, mu.parts()); }

std::uint64_t count_semistandard(const Partition& shape, int max_entry) {
  if (max_entry < 0) throw std::invalid_argument("max_entry must be nonnegative");
  // Transfer over letters: state is the shape filled so far.
  std::map<std::vector<int>, std::uint64_t> states{{std::vector<int>(static_cast<std::size_t>(shape.depth()), 0), 1}};
  for (int letter = 0; letter < max_entry; ++letter) {
    std::map<std::vector<int>, std::uint64_t> next;
    for (const auto& [lengths, count] : states) {
      std::vector<int> grown = lengths;
      std::function<void(std::size_t)> extend = [&](std::size_t row) {
        if (row == grown.size()) {
          next[grown] += count;
          return;
        }
        const int ceiling = row == 0 ? shape[0] : std::min(shape[row], lengths[row - 1]);
        for (int len = lengths[row]; len <= ceiling; ++len) {
          grown[row] = len;
          extend(row + 1);
        }
        grown[row] = lengths[row];
      };
      extend(0);
    }
    states = std::move(next);
  }
  const auto it = states.find(shape.parts());
  return it == states.end() ? 0 : it->second;
}

namespace {

// Beta-set form of Murnaghan-Nakayama: a rim hook of length r is a bead moved
// from b to b - r onto an empty position; the sign counts beads jumped over.
long long mn_beads(std::vector<int> beads, const std::vector<int>& parts, std::size_t index,
                   std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
  if (index == parts.size()) return 1;
  const auto key = std::make_pair(beads, index);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = parts[index];
  long long total = 0;
  for (std::size_t b = 0; b < beads.size(); ++b) {
    const int from = beads[b];
    const int to = from - r;
    if (to < 0 || std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
    int jumped = 0;
    for (int other : beads)
      if (other > to && other < from) ++jumped;
    auto moved = beads;
    moved[b] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    const long long sub = mn_beads(moved, parts, index + 1, memo);
    total += (jumped % 2 ? -sub : sub);
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& class_type) {
  if (lambda.size() != class_type.size()) throw ShapeError("character arguments have different sizes");
  const int depth = lambda.depth();
  std::vector<int> beads;
  for (int i = 0; i < depth; ++i) beads.push_back(lambda[static_cast<std::size_t>(i)] + depth - 1 - i);
  std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
  return mn_beads(beads, class_type.parts(), 0, memo);
}

std::uint64_t class_size(const Partition& cycle_type) {
  Integer denominator = 1;
  std::map<int, unsigned> multiplicity;
  for (int part : cycle_type.parts()) ++multiplicity[part];
  for (const auto& [length, count] : multiplicity) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(length), count);
    denominator *= p * factorial_integer(count);
  }
  const Integer size = factorial_integer(static_cast<unsigned>(cycle_type.size())) / denominator;
  return size.get_ui();
}

Permutation g_of_T(const StandardTableau& tableau) {
  if (!tableau.shape().is_rectangle()) throw ShapeError("g(T) requires a rectangular tableau");
  return Permutation(tableau.reading_word());
}

}  // namespace wreathdet
