#pragma once

#include <iosfwd>
#include <string>

#include "wreathdet/matrix.hpp"

namespace wreathdet::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCap = 3;

/// MatrixFile JSON {"rows", "cols", "entries"} or CSV with fraction cells.
/// Throws ParseError.
RationalMatrix parse_matrix(const std::string& text);
RationalMatrix read_matrix_file(const std::string& path);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wreathdet::cli
