#pragma once

// Helpers shared by the unit tests and the acceptance runner.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "purechess/board.hpp"
#include "purechess/game.hpp"

namespace support {

using namespace purechess;

Piece white(PieceType t, int x, int y);
Piece black(PieceType t, int x, int y);
Coordinate sq(int x, int y);
Move mv(const Piece& from, int x, int y);
Move promote(const Piece& from, int x, int y, PieceType t);

/// Board with the given pieces and moves, the latter listed oldest first.
Board board_of(std::initializer_list<Piece> pieces, std::initializer_list<Move> played = {});

/// Plays SAN-free coordinate moves ("e2e4", "e7e8q") from the start.
Game play_uci(std::initializer_list<const char*> moves);

oracle::Position to_oracle(const Board& board, Colour to_move);
oracle::OMove to_oracle(const Move& m);
std::vector<oracle::OMove> to_oracle(const MoveSet& moves);

struct Position {
    Board board;
    Colour to_move;
};

/// Both kings plus up to max_pieces - 2 other pieces, with the side not to
/// move out of check. Some positions keep kings and rooks on their home
/// squares with a random castling history, and some end in a fresh double
/// pawn push next to an enemy pawn.
Position random_small_position(std::mt19937_64& rng, int max_pieces = 6);

/// Compares possible_moves with the oracle for every piece of the side to
/// move. Returns an empty string on agreement, else a description.
std::string compare_with_oracle(const Position& pos);

/// Invariant violations after `next = game_move(prev, m)`, empty if none.
std::string check_step(const Game& prev, const Move& m, const GameMoveResult& next);

std::string describe(const Board& board);

}  // namespace support
