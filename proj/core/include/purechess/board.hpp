#pragma once

/// @file board.hpp
/// Board values, move values, history, and everything that needs the
/// history to decide: castling, en passant, the double pawn push,
/// promotion, check detection, legal-move generation and move application.
///
/// Every type here is an immutable value. Applying a move returns a new
/// Board; the argument is never touched, and the previous board stays valid
/// (this is also how "undo" works).

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "purechess/piece.hpp"

namespace purechess {

/// A piece leaving one square and arriving on another. `to()` carries the
/// piece as it stands after the move, so a promotion is a move whose type
/// changes.
class Move {
public:
    /// Throws ContractViolation unless the colours match, the squares differ
    /// and any type change is a pawn promoting on its last rank.
    Move(const Piece& from, const Piece& to);

    [[nodiscard]] const Piece& from() const noexcept { return from_; }
    [[nodiscard]] const Piece& to() const noexcept { return to_; }
    [[nodiscard]] bool is_promotion() const noexcept { return from_.type != to_.type; }

    auto operator<=>(const Move&) const = default;

private:
    Piece from_;
    Piece to_;
};

/// Moves without duplicates, in ascending Move order.
using MoveSet = std::vector<Move>;

/// Move sequence, newest first. Persistent: prepending shares the tail with
/// the original, so copies are cheap and old values stay valid.
class History {
public:
    class iterator;

    History() = default;

    [[nodiscard]] History prepend(const Move& m) const;

    [[nodiscard]] std::size_t size() const noexcept { return head_ ? head_->size : 0; }
    [[nodiscard]] bool empty() const noexcept { return !head_; }
    /// The most recent move.
    [[nodiscard]] std::optional<Move> latest() const;
    /// True when some recorded move started from or landed on `c`.
    [[nodiscard]] bool touched(Coordinate c) const noexcept {
        return head_ && ((head_->touched >> c.index()) & 1U);
    }
    /// Newest first.
    [[nodiscard]] std::vector<Move> moves() const;
    /// Oldest first, i.e. in playing order.
    [[nodiscard]] std::vector<Move> chronological() const;

    [[nodiscard]] iterator begin() const;
    [[nodiscard]] iterator end() const;

    friend bool operator==(const History& a, const History& b);

private:
    struct Node {
        Move move;
        std::shared_ptr<const Node> next;
        std::size_t size;
        std::uint64_t touched;
    };
    explicit History(std::shared_ptr<const Node> head) : head_(std::move(head)) {}

    std::shared_ptr<const Node> head_;
};

class History::iterator {
public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Move;
    using difference_type = std::ptrdiff_t;
    using pointer = const Move*;
    using reference = const Move&;

    iterator() = default;
    explicit iterator(const Node* node) : node_(node) {}
    const Move& operator*() const { return node_->move; }
    const Move* operator->() const { return &node_->move; }
    iterator& operator++() {
        node_ = node_->next.get();
        return *this;
    }
    iterator operator++(int) {
        auto copy = *this;
        ++*this;
        return copy;
    }
    bool operator==(const iterator&) const = default;

private:
    const Node* node_ = nullptr;
};

inline History::iterator History::begin() const { return iterator(head_.get()); }
inline History::iterator History::end() const { return iterator(nullptr); }

/// The set of pieces on the board. At most one piece per square, at most one
/// king per colour, never empty.
class BoardState {
public:
    /// Throws ContractViolation when the invariants do not hold.
    [[nodiscard]] static BoardState from_pieces(std::span<const Piece> pieces);
    [[nodiscard]] static BoardState from_pieces(std::initializer_list<Piece> pieces) {
        return from_pieces(std::span<const Piece>(pieces.begin(), pieces.size()));
    }

    [[nodiscard]] std::optional<Piece> at(Coordinate c) const noexcept;
    [[nodiscard]] bool occupied(Coordinate c) const noexcept { return cells_[c.index()] != 0; }
    [[nodiscard]] bool contains(const Piece& p) const noexcept;
    [[nodiscard]] std::size_t size() const noexcept { return count_; }
    [[nodiscard]] std::optional<Piece> king(Colour c) const noexcept;

    /// All pieces ordered by square (a1, b1, ..., h8).
    [[nodiscard]] std::vector<Piece> pieces() const;
    [[nodiscard]] std::vector<Piece> pieces(Colour c) const;
    [[nodiscard]] ObstacleSet obstacles() const { return ObstacleSet::from_masks(occupied_, black_); }

    /// A copy with the `vacate` squares emptied, then `place` put down.
    /// Throws ContractViolation if a placed piece lands on a still-occupied
    /// square, duplicates a king, or the result is empty.
    [[nodiscard]] BoardState edited(std::initializer_list<Coordinate> vacate,
                                    std::initializer_list<Piece> place) const;

    bool operator==(const BoardState&) const = default;

private:
    BoardState() = default;
    void put(const Piece& p);

    // 0 = empty, otherwise 1 + colour * 6 + type.
    std::array<std::uint8_t, 64> cells_{};
    std::uint64_t occupied_ = 0;
    std::uint64_t black_ = 0;
    std::array<std::int8_t, 2> kings_{-1, -1};
    std::uint8_t count_ = 0;
};

class Board {
public:
    explicit Board(BoardState state, History history = {})
        : state_(std::move(state)), history_(std::move(history)) {}

    [[nodiscard]] const BoardState& board_state() const noexcept { return state_; }
    [[nodiscard]] const History& history() const noexcept { return history_; }

    friend bool operator==(const Board&, const Board&) = default;

private:
    BoardState state_;
    History history_;
};

/// The initial position with an empty history.
[[nodiscard]] Board default_board();

/// Squares the pieces of colour `by` could move to by their ordinary rule,
/// except that pawns contribute their two forward diagonals (whether or not
/// anything stands there) and never their forward push.
[[nodiscard]] SquareSet attacked_squares(const BoardState& state, Colour by);

/// Whether any piece of colour `by` attacks `square`. Agrees with
/// attacked_squares on every square not held by `by`.
[[nodiscard]] bool is_attacked(const BoardState& state, Coordinate square, Colour by);

/// Whether the king of colour `c` stands on an attacked square.
/// Throws ContractViolation if `c` has no king.
[[nodiscard]] bool in_check(const BoardState& state, Colour c);

[[nodiscard]] MoveSet pawn_move_two(const BoardState& state, const Piece& pawn);
[[nodiscard]] MoveSet en_passant(const Board& board, const Piece& pawn);
[[nodiscard]] MoveSet pawn_promotion(const BoardState& state, const Piece& pawn);
[[nodiscard]] MoveSet castling_possible(const Board& board, const Piece& king);

/// Special moves for the piece: double push, en passant and promotion for
/// pawns; castling for kings; nothing for the rest.
[[nodiscard]] MoveSet stateful_possible_moves(const Board& board, const Piece& piece);

/// The candidate moves (ordinary plus special) the rules forbid: those that
/// leave the mover's own king attacked, and pawn moves reaching the last
/// rank without promoting. A side without a king cannot be in check, so for
/// it only the promotion rule applies.
[[nodiscard]] MoveSet stateful_impossible_moves(const Board& board, const Piece& piece);

/// Legal moves of one piece. Throws ContractViolation if the piece is not on
/// the board.
[[nodiscard]] MoveSet possible_moves(const Board& board, const Piece& piece);

/// Legal moves of every piece of colour `c`.
[[nodiscard]] MoveSet legal_moves(const Board& board, Colour c);

[[nodiscard]] bool iss_castling(const Board& board, const Move& mov);
[[nodiscard]] bool iss_en_passant(const Board& board, const Move& mov);

/// Applies a legal move. This is the engine's legality gate: anything not in
/// possible_moves(board, mov.from()) throws ContractViolation.
[[nodiscard]] Board move(const Board& board, const Move& mov);

/// The three ways of applying a move. Each checks legality and its own kind.
[[nodiscard]] Board move_other(const Board& board, const Move& mov);
[[nodiscard]] Board move_castling(const Board& board, const Move& mov);
[[nodiscard]] Board move_en_passant(const Board& board, const Move& mov);

/// Number of legal move sequences of exactly `depth` plies, `to_move` first.
[[nodiscard]] std::uint64_t perft(const Board& board, Colour to_move, int depth);

/// perft split by the first move.
[[nodiscard]] std::vector<std::pair<Move, std::uint64_t>> perft_divide(const Board& board,
                                                                       Colour to_move, int depth);

/// Long algebraic form, e.g. "e2e4", "e7e8q".
[[nodiscard]] std::string to_uci(const Move& m);

std::ostream& operator<<(std::ostream& os, const Move& m);

}  // namespace purechess
