#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wreathdet {

/// Enumeration caps. Every exhaustive sum in the library checks one of these
/// before it starts and throws CapExceeded instead of truncating.
struct Limits {
  int max_degree = 12;                          // full enumeration of S_N
  std::uint64_t max_young_order = 10'000'000;   // (k!)^n terms in S_k^n sums
  int max_tableau_size = 20;                    // |shape| for tableau enumeration
  std::uint64_t max_xi_order = 200;             // f^{(k^n)} for the Xi matrix
  std::uint64_t max_colorings = 10'000'000;     // (kn)!/(k!)^n coloring functions
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t requested, std::uint64_t cap)
      : std::runtime_error(what + " (requested " + std::to_string(requested) +
                           ", cap " + std::to_string(cap) + ")"),
        requested_(requested),
        cap_(cap) {}

  std::uint64_t requested() const { return requested_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

/// Dimension or shape mismatch between arguments.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (fractions, matrix files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wreathdet
