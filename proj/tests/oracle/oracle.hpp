#pragma once

// Brute-force reference move generator used only by the tests. It shares no
// code with the engine: squares are 0..63 (a1 = 0), pieces are letters, and
// every (from, to) pair is tried against the rules of chess written out
// directly.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

enum Side : int { kWhite = 0, kBlack = 1 };

struct Cell {
    char kind = 0;  // 0 empty, else one of P N B R Q K
    int side = kWhite;
    bool operator==(const Cell&) const = default;
};

struct Position {
    std::array<Cell, 64> cells{};
    int to_move = kWhite;
    std::vector<std::pair<int, int>> history;  // (from, to), oldest first
};

struct OMove {
    int from = 0;
    int to = 0;
    char promo = 0;  // 0 or one of N B R Q
    auto operator<=>(const OMove&) const = default;
};

bool attacked(const Position& pos, int square, int by);
bool king_in_check(const Position& pos, int side);

/// All legal moves of pos.to_move that start on `from`, sorted.
std::vector<OMove> moves_from(const Position& pos, int from);
/// All legal moves of pos.to_move, sorted.
std::vector<OMove> legal_moves(const Position& pos);
/// Plays a move (assumed legal) and hands the turn over.
Position apply(const Position& pos, const OMove& m);
std::uint64_t perft(const Position& pos, int depth);

Position start_position();

}  // namespace oracle
