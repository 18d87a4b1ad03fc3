#include "purechess/game.hpp"

namespace purechess {

std::string to_string(const Winner& w) {
    if (!w)
        return "ongoing";
    if (std::holds_alternative<Remis>(*w))
        return "remis";
    return to_string(std::get<Colour>(*w));
}

Game new_game() { return Game{default_board(), Colour::white}; }

namespace {

bool has_legal_move(const Board& board, Colour c) {
    for (const auto& p : board.board_state().pieces(c))
        if (!possible_moves(board, p).empty())
            return true;
    return false;
}

Winner stuck_outcome(const Board& board, Colour stuck) {
    if (board.board_state().king(stuck) && in_check(board.board_state(), stuck))
        return Winner{opposite_colour(stuck)};
    return Winner{remis};
}

}  // namespace

GameMoveResult game_move(const Game& game, const Move& mov) {
    if (mov.from().colour != game.turn)
        throw ContractViolation("it is " + to_string(game.turn) + "'s turn, not " +
                                to_string(mov.from().colour) + "'s");
    Board next = move(game.board, mov);
    const Colour opponent = opposite_colour(game.turn);
    Winner winner;
    if (!has_legal_move(next, opponent))
        winner = stuck_outcome(next, opponent);
    return {Game{std::move(next), opponent}, winner};
}

Winner game_status(const Game& game) {
    if (has_legal_move(game.board, game.turn))
        return std::nullopt;
    return stuck_outcome(game.board, game.turn);
}

}  // namespace purechess
