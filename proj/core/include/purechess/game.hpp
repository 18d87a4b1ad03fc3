#pragma once

/// @file game.hpp
/// Turn order and the end of the game.

#include <optional>
#include <string>
#include <variant>

#include "purechess/board.hpp"

namespace purechess {

/// Draw by stalemate.
struct Remis {
    constexpr bool operator==(const Remis&) const = default;
};
inline constexpr Remis remis{};

/// Empty while the game is ongoing; otherwise the winning colour or Remis.
using Winner = std::optional<std::variant<Colour, Remis>>;

[[nodiscard]] std::string to_string(const Winner& w);

struct Game {
    Board board;
    Colour turn;

    friend bool operator==(const Game&, const Game&) = default;
};

struct GameMoveResult {
    Game game;
    Winner winner;
};

/// Initial position, white to move.
[[nodiscard]] Game new_game();

/// Plays `mov` for the side to move.
///
/// When the opponent is left without a legal move the result carries the
/// winner (the mover on checkmate, Remis on stalemate) and the final
/// position, with the move passed to the stuck side. Otherwise the winner is
/// empty and the turn passes as usual.
///
/// Throws ContractViolation for a move of the wrong colour or an illegal one.
[[nodiscard]] GameMoveResult game_move(const Game& game, const Move& mov);

/// The outcome as seen from the side to move: checkmated, stalemated, or
/// ongoing.
[[nodiscard]] Winner game_status(const Game& game);

}  // namespace purechess
