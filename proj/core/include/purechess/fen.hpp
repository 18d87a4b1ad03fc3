#pragma once

/// @file fen.hpp
/// Minimal Forsyth-Edwards Notation loader, used to set up perft positions.

#include <stdexcept>
#include <string>
#include <string_view>

#include "purechess/game.hpp"

namespace purechess {

class FenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads "<placement> <side> [<castling> [<en-passant> [<halfmove> <fullmove>]]]".
///
/// The engine derives castling and en passant rights from the move history,
/// so the optional fields are turned into a synthetic history: a lost right
/// becomes a recorded move off the king's or rook's home square, and an en
/// passant square becomes a most-recent double pawn push. Without a castling
/// field every king and rook on its home square keeps its rights.
///
/// Throws FenError on malformed input.
[[nodiscard]] Game parse_fen(std::string_view fen);

/// Placement and side to move only, e.g. "rnbqkbnr/.../RNBQKBNR w".
[[nodiscard]] std::string placement_fen(const Game& game);

}  // namespace purechess
