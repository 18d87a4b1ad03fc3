#pragma once

#include <iosfwd>
#include <string>

#include "purechess/board.hpp"

namespace purechess::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kIoError = 2;

/// 8 rows of 8 characters, rank 8 first. Upper case is white, '.' is empty.
[[nodiscard]] std::string render_board(const BoardState& state);

/// Entry point behind the `purechess` executable. ANSI colour is used only
/// when `out` is std::cout attached to a terminal and NO_COLOR is unset.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace purechess::cli
