#include "purechess/piece.hpp"

#include <ostream>

namespace purechess {

Coordinate Coordinate::at(int x, int y) {
    auto c = make(x, y);
    require(c.has_value(), "coordinate (" + std::to_string(x) + ", " + std::to_string(y) +
                               ") is off the board");
    return *c;
}

std::string Coordinate::name() const {
    return {static_cast<char>('a' + x_ - 1), static_cast<char>('0' + y_)};
}

void ObstacleSet::insert(Obstacle o) {
    const auto b = std::uint64_t{1} << o.square.index();
    require(!(occupied_ & b), "two obstacles on " + o.square.name());
    occupied_ |= b;
    if (o.colour == Colour::black)
        black_ |= b;
}

ObstacleSet ObstacleSet::restricted_to(SquareSet subset) const noexcept {
    ObstacleSet r;
    r.occupied_ = occupied_ & subset.mask();
    r.black_ = black_ & subset.mask();
    return r;
}

std::optional<Coordinate> possible_move_direction(const Piece& p, const ObstacleSet& os,
                                                  Direction dir) {
    auto target = p.square.offset(dir.dx, dir.dy);
    if (!target || os.occupied_by(*target, p.colour))
        return std::nullopt;
    return target;
}

SquareSet possible_moves_direction(const Piece& p, const ObstacleSet& os, Direction dir) {
    require(dir.dx != 0 || dir.dy != 0, "ray direction must be non-zero");
    SquareSet ray;
    Coordinate from = p.square;
    // Every non-zero step moves at least one unit along some axis, so seven
    // steps always reach the edge.
    for (int step = 0; step < 7; ++step) {
        auto next = from.offset(dir.dx, dir.dy);
        if (!next)
            break;
        auto occupant = os.colour_at(*next);
        if (occupant && *occupant == p.colour)
            break;
        ray.insert(*next);
        if (occupant)
            break;
        from = *next;
    }
    return ray;
}

namespace {

template <std::size_t N>
SquareSet steps(const Piece& p, const ObstacleSet& os, const std::array<Direction, N>& dirs) {
    SquareSet out;
    for (auto d : dirs)
        if (auto c = possible_move_direction(p, os, d))
            out.insert(*c);
    return out;
}

template <std::size_t N>
SquareSet rays(const Piece& p, const ObstacleSet& os, const std::array<Direction, N>& dirs) {
    SquareSet out;
    for (auto d : dirs)
        out |= possible_moves_direction(p, os, d);
    return out;
}

}  // namespace

SquareSet knight_move_pattern(const Piece& p, const ObstacleSet& os) {
    return steps(p, os, kKnightOffsets);
}

SquareSet king_move_pattern(const Piece& p, const ObstacleSet& os) {
    return steps(p, os, kAllDirections);
}

SquareSet rook_move_pattern(const Piece& p, const ObstacleSet& os) { return rays(p, os, kOrthogonal); }

SquareSet bishop_move_pattern(const Piece& p, const ObstacleSet& os) { return rays(p, os, kDiagonal); }

SquareSet queen_move_pattern(const Piece& p, const ObstacleSet& os) {
    return rays(p, os, kAllDirections);
}

SquareSet pawn_move_pattern(const Piece& p, const ObstacleSet& os) {
    SquareSet out;
    const int dy = pawn_direction(p.colour);
    if (auto ahead = p.square.offset(0, dy); ahead && !os.occupied(*ahead))
        out.insert(*ahead);
    for (int dx : {-1, 1})
        if (auto diag = p.square.offset(dx, dy); diag && os.occupied_by(*diag, opposite_colour(p.colour)))
            out.insert(*diag);
    return out;
}

SquareSet type_based_moves(const Piece& p, const ObstacleSet& os) {
    switch (p.type) {
        case PieceType::pawn: return pawn_move_pattern(p, os);
        case PieceType::rook: return rook_move_pattern(p, os);
        case PieceType::knight: return knight_move_pattern(p, os);
        case PieceType::bishop: return bishop_move_pattern(p, os);
        case PieceType::queen: return queen_move_pattern(p, os);
        case PieceType::king: return king_move_pattern(p, os);
    }
    return {};
}

ObstacleSet pieces_to_obstacles(std::span<const Piece> pieces) {
    ObstacleSet os;
    for (const auto& p : pieces)
        os.insert({p.square, p.colour});
    return os;
}

std::string to_string(Colour c) { return c == Colour::white ? "white" : "black"; }

std::string to_string(PieceType t) {
    switch (t) {
        case PieceType::pawn: return "pawn";
        case PieceType::rook: return "rook";
        case PieceType::knight: return "knight";
        case PieceType::bishop: return "bishop";
        case PieceType::queen: return "queen";
        case PieceType::king: return "king";
    }
    return "?";
}

std::string to_string(const Piece& p) {
    return to_string(p.colour) + " " + to_string(p.type) + " " + p.square.name();
}

std::ostream& operator<<(std::ostream& os, Colour c) { return os << to_string(c); }
std::ostream& operator<<(std::ostream& os, PieceType t) { return os << to_string(t); }
std::ostream& operator<<(std::ostream& os, Coordinate c) { return os << c.name(); }
std::ostream& operator<<(std::ostream& os, const Piece& p) { return os << to_string(p); }

}  // namespace purechess
