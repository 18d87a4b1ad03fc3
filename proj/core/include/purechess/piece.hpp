#pragma once

/// @file piece.hpp
/// Colours, piece types, coordinates and the obstacle-aware movement
/// patterns of individual pieces. Nothing here knows about move history:
/// castling, en passant, the double pawn push and promotion live in board.hpp.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <optional>
#include <span>
#include <string>

#include "purechess/contract.hpp"

namespace purechess {

enum class Colour : std::uint8_t { white, black };

[[nodiscard]] constexpr Colour opposite_colour(Colour c) noexcept {
    return c == Colour::white ? Colour::black : Colour::white;
}

enum class PieceType : std::uint8_t { pawn, rook, knight, bishop, queen, king };

inline constexpr std::array<PieceType, 6> kAllPieceTypes{
    PieceType::pawn, PieceType::rook,  PieceType::knight,
    PieceType::bishop, PieceType::queen, PieceType::king};

inline constexpr std::array<PieceType, 4> kPromotableTypes{
    PieceType::knight, PieceType::bishop, PieceType::rook, PieceType::queen};

[[nodiscard]] constexpr bool is_promotable(PieceType t) noexcept {
    return t == PieceType::knight || t == PieceType::bishop || t == PieceType::rook ||
           t == PieceType::queen;
}

/// Rank a pawn of colour `c` promotes on.
[[nodiscard]] constexpr int last_rank(Colour c) noexcept { return c == Colour::white ? 8 : 1; }

/// Forward y-step of a pawn of colour `c`.
[[nodiscard]] constexpr int pawn_direction(Colour c) noexcept { return c == Colour::white ? 1 : -1; }

/// A square on the board. Files (x) and ranks (y) are both 1-based, 1..8.
/// Out-of-range values cannot be constructed.
class Coordinate {
public:
    /// Absent when either component falls outside 1..8.
    [[nodiscard]] static constexpr std::optional<Coordinate> make(int x, int y) noexcept {
        if (x < 1 || x > 8 || y < 1 || y > 8)
            return std::nullopt;
        return Coordinate(x, y);
    }

    /// Throws ContractViolation when out of range.
    [[nodiscard]] static Coordinate at(int x, int y);

    /// 0..63, a1 = 0, h1 = 7, a8 = 56.
    [[nodiscard]] static Coordinate from_index(int index) {
        require(index >= 0 && index < 64, "square index out of range");
        return Coordinate(index % 8 + 1, index / 8 + 1);
    }

    [[nodiscard]] constexpr int x() const noexcept { return x_; }
    [[nodiscard]] constexpr int y() const noexcept { return y_; }
    [[nodiscard]] constexpr int index() const noexcept { return (y_ - 1) * 8 + (x_ - 1); }

    /// The square shifted by (dx, dy), absent when that leaves the board.
    [[nodiscard]] constexpr std::optional<Coordinate> offset(int dx, int dy) const noexcept {
        return make(x_ + dx, y_ + dy);
    }

    /// Algebraic name, e.g. "e4".
    [[nodiscard]] std::string name() const;

    constexpr auto operator<=>(const Coordinate&) const = default;

private:
    constexpr Coordinate(int x, int y) noexcept
        : x_(static_cast<std::uint8_t>(x)), y_(static_cast<std::uint8_t>(y)) {}

    std::uint8_t x_;
    std::uint8_t y_;
};

/// coordinate_factory: the coordinate (x, y), or nothing when it is off the board.
[[nodiscard]] constexpr std::optional<Coordinate> coordinate_factory(int x, int y) noexcept {
    return Coordinate::make(x, y);
}

struct Direction {
    int dx;
    int dy;
    constexpr bool operator==(const Direction&) const = default;
};

struct Piece {
    PieceType type;
    Coordinate square;
    Colour colour;

    constexpr auto operator<=>(const Piece&) const = default;
};

struct Obstacle {
    Coordinate square;
    Colour colour;

    constexpr auto operator<=>(const Obstacle&) const = default;
};

/// Set of coordinates backed by a 64-bit mask; iterates in index order.
class SquareSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Coordinate;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Coordinate;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        Coordinate operator*() const { return Coordinate::from_index(std::countr_zero(rest_)); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr SquareSet() = default;
    SquareSet(std::initializer_list<Coordinate> squares) {
        for (auto c : squares)
            insert(c);
    }
    [[nodiscard]] static constexpr SquareSet from_mask(std::uint64_t mask) noexcept {
        SquareSet s;
        s.bits_ = mask;
        return s;
    }

    void insert(Coordinate c) noexcept { bits_ |= bit(c); }
    void erase(Coordinate c) noexcept { bits_ &= ~bit(c); }
    [[nodiscard]] bool contains(Coordinate c) const noexcept { return (bits_ & bit(c)) != 0; }
    [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    [[nodiscard]] bool empty() const noexcept { return bits_ == 0; }
    [[nodiscard]] std::uint64_t mask() const noexcept { return bits_; }

    [[nodiscard]] iterator begin() const { return iterator(bits_); }
    [[nodiscard]] iterator end() const { return iterator(0); }

    SquareSet& operator|=(SquareSet other) noexcept {
        bits_ |= other.bits_;
        return *this;
    }
    friend SquareSet operator|(SquareSet a, SquareSet b) noexcept { return a |= b; }
    friend SquareSet operator&(SquareSet a, SquareSet b) noexcept { return from_mask(a.bits_ & b.bits_); }
    constexpr bool operator==(const SquareSet&) const = default;

private:
    static std::uint64_t bit(Coordinate c) noexcept { return std::uint64_t{1} << c.index(); }

    std::uint64_t bits_ = 0;
};

/// What a moving piece knows about the others: which squares are taken and
/// by whom. At most one obstacle per square.
class ObstacleSet {
public:
    ObstacleSet() = default;
    ObstacleSet(std::initializer_list<Obstacle> obstacles) {
        for (const auto& o : obstacles)
            insert(o);
    }

    /// `black` must be a subset of `occupied`.
    [[nodiscard]] static ObstacleSet from_masks(std::uint64_t occupied, std::uint64_t black) {
        require((black & ~occupied) == 0, "black obstacle mask outside occupied mask");
        ObstacleSet os;
        os.occupied_ = occupied;
        os.black_ = black;
        return os;
    }

    /// Throws ContractViolation if the square is already taken.
    void insert(Obstacle o);

    [[nodiscard]] std::optional<Colour> colour_at(Coordinate c) const noexcept {
        const auto b = std::uint64_t{1} << c.index();
        if (!(occupied_ & b))
            return std::nullopt;
        return (black_ & b) ? Colour::black : Colour::white;
    }
    [[nodiscard]] bool occupied(Coordinate c) const noexcept {
        return (occupied_ >> c.index()) & 1U;
    }
    [[nodiscard]] bool occupied_by(Coordinate c, Colour colour) const noexcept {
        const auto at = colour_at(c);
        return at && *at == colour;
    }
    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(std::popcount(occupied_));
    }
    [[nodiscard]] SquareSet squares() const noexcept { return SquareSet::from_mask(occupied_); }

    /// Only the obstacles standing on `subset`.
    [[nodiscard]] ObstacleSet restricted_to(SquareSet subset) const noexcept;

    bool operator==(const ObstacleSet&) const = default;

private:
    std::uint64_t occupied_ = 0;
    std::uint64_t black_ = 0;
};

/// The single square `p.square + dir`, unless it is off the board or held by a
/// piece of p's own colour. An enemy-held square is returned (a capture).
[[nodiscard]] std::optional<Coordinate> possible_move_direction(const Piece& p, const ObstacleSet& os,
                                                                Direction dir);

/// The ray from p.square along `dir`: stops before the edge or a friendly
/// obstacle, stops on (and includes) an enemy obstacle. At most 7 squares.
/// Requires dir != (0, 0).
[[nodiscard]] SquareSet possible_moves_direction(const Piece& p, const ObstacleSet& os, Direction dir);

inline constexpr std::array<Direction, 8> kKnightOffsets{{
    {1, 2}, {-1, 2}, {1, -2}, {-1, -2}, {2, 1}, {-2, 1}, {2, -1}, {-2, -1}}};
inline constexpr std::array<Direction, 4> kOrthogonal{{{0, 1}, {0, -1}, {1, 0}, {-1, 0}}};
inline constexpr std::array<Direction, 4> kDiagonal{{{1, 1}, {-1, -1}, {-1, 1}, {1, -1}}};
inline constexpr std::array<Direction, 8> kAllDirections{{
    {0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, 1}, {-1, -1}, {-1, 1}, {1, -1}}};

[[nodiscard]] SquareSet knight_move_pattern(const Piece& p, const ObstacleSet& os);
[[nodiscard]] SquareSet king_move_pattern(const Piece& p, const ObstacleSet& os);
[[nodiscard]] SquareSet rook_move_pattern(const Piece& p, const ObstacleSet& os);
[[nodiscard]] SquareSet bishop_move_pattern(const Piece& p, const ObstacleSet& os);
[[nodiscard]] SquareSet queen_move_pattern(const Piece& p, const ObstacleSet& os);
/// One step forward onto an empty square, or one step diagonally forward onto
/// an enemy. The two-step advance is a board-level special move.
[[nodiscard]] SquareSet pawn_move_pattern(const Piece& p, const ObstacleSet& os);

/// Squares the piece may reach by its ordinary movement rule.
[[nodiscard]] SquareSet type_based_moves(const Piece& p, const ObstacleSet& os);

/// Requires that no two pieces share a square.
[[nodiscard]] ObstacleSet pieces_to_obstacles(std::span<const Piece> pieces);

[[nodiscard]] std::string to_string(Colour c);
[[nodiscard]] std::string to_string(PieceType t);
[[nodiscard]] std::string to_string(const Piece& p);

std::ostream& operator<<(std::ostream& os, Colour c);
std::ostream& operator<<(std::ostream& os, PieceType t);
std::ostream& operator<<(std::ostream& os, Coordinate c);
std::ostream& operator<<(std::ostream& os, const Piece& p);

}  // namespace purechess
