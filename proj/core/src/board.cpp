#include "purechess/board.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace purechess {

// ---------------------------------------------------------------------------
// Move / History

Move::Move(const Piece& from, const Piece& to) : from_(from), to_(to) {
    if (from.colour != to.colour)
        throw ContractViolation("a move cannot change the colour of a piece");
    if (from.square == to.square)
        throw ContractViolation("a move must change the square of a piece");
    if (from.type != to.type &&
        !(from.type == PieceType::pawn && is_promotable(to.type) &&
          to.square.y() == last_rank(from.colour)))
        throw ContractViolation("only a pawn reaching its last rank may change type");
}

History History::prepend(const Move& m) const {
    const std::uint64_t bits = (std::uint64_t{1} << m.from().square.index()) |
                               (std::uint64_t{1} << m.to().square.index());
    const std::uint64_t previous = head_ ? head_->touched : 0;
    return History(std::make_shared<const Node>(Node{m, head_, size() + 1, previous | bits}));
}

std::optional<Move> History::latest() const {
    if (!head_)
        return std::nullopt;
    return head_->move;
}

std::vector<Move> History::moves() const {
    std::vector<Move> out;
    out.reserve(size());
    for (const auto& m : *this)
        out.push_back(m);
    return out;
}

std::vector<Move> History::chronological() const {
    auto out = moves();
    std::reverse(out.begin(), out.end());
    return out;
}

bool operator==(const History& a, const History& b) {
    if (a.size() != b.size())
        return false;
    const History::Node* x = a.head_.get();
    const History::Node* y = b.head_.get();
    while (x && x != y) {
        if (x->move != y->move)
            return false;
        x = x->next.get();
        y = y->next.get();
    }
    return true;
}

// ---------------------------------------------------------------------------
// BoardState

namespace {

std::uint8_t encode(const Piece& p) {
    return static_cast<std::uint8_t>(1 + static_cast<int>(p.colour) * 6 + static_cast<int>(p.type));
}

Piece decode(std::uint8_t cell, Coordinate c) {
    const int v = cell - 1;
    return Piece{static_cast<PieceType>(v % 6), c, static_cast<Colour>(v / 6)};
}

}  // namespace

void BoardState::put(const Piece& p) {
    const int i = p.square.index();
    if (cells_[i] != 0)
        throw ContractViolation("two pieces on " + p.square.name());
    if (p.type == PieceType::king) {
        auto& k = kings_[static_cast<int>(p.colour)];
        if (k >= 0)
            throw ContractViolation("more than one " + to_string(p.colour) + " king");
        k = static_cast<std::int8_t>(i);
    }
    cells_[i] = encode(p);
    occupied_ |= std::uint64_t{1} << i;
    if (p.colour == Colour::black)
        black_ |= std::uint64_t{1} << i;
    ++count_;
}

BoardState BoardState::from_pieces(std::span<const Piece> pieces) {
    BoardState s;
    for (const auto& p : pieces)
        s.put(p);
    require(s.count_ > 0, "a board state needs at least one piece");
    return s;
}

BoardState BoardState::edited(std::initializer_list<Coordinate> vacate,
                              std::initializer_list<Piece> place) const {
    BoardState s = *this;
    for (auto c : vacate) {
        const int i = c.index();
        if (s.cells_[i] == 0)
            continue;
        const auto bit = std::uint64_t{1} << i;
        for (auto& k : s.kings_)
            if (k == i)
                k = -1;
        s.cells_[i] = 0;
        s.occupied_ &= ~bit;
        s.black_ &= ~bit;
        --s.count_;
    }
    for (const auto& p : place)
        s.put(p);
    require(s.count_ > 0, "a board state needs at least one piece");
    return s;
}

std::optional<Piece> BoardState::at(Coordinate c) const noexcept {
    const auto cell = cells_[c.index()];
    if (cell == 0)
        return std::nullopt;
    return decode(cell, c);
}

bool BoardState::contains(const Piece& p) const noexcept { return cells_[p.square.index()] == encode(p); }

std::optional<Piece> BoardState::king(Colour c) const noexcept {
    const int k = kings_[static_cast<int>(c)];
    if (k < 0)
        return std::nullopt;
    return Piece{PieceType::king, Coordinate::from_index(k), c};
}

std::vector<Piece> BoardState::pieces() const {
    std::vector<Piece> out;
    out.reserve(count_);
    for (int i = 0; i < 64; ++i)
        if (cells_[i])
            out.push_back(decode(cells_[i], Coordinate::from_index(i)));
    return out;
}

std::vector<Piece> BoardState::pieces(Colour c) const {
    std::vector<Piece> out;
    for (int i = 0; i < 64; ++i)
        if (cells_[i]) {
            auto p = decode(cells_[i], Coordinate::from_index(i));
            if (p.colour == c)
                out.push_back(p);
        }
    return out;
}

Board default_board() {
    constexpr std::array<PieceType, 8> back_rank{PieceType::rook,  PieceType::knight, PieceType::bishop,
                                                 PieceType::queen, PieceType::king,   PieceType::bishop,
                                                 PieceType::knight, PieceType::rook};
    std::vector<Piece> pieces;
    for (int x = 1; x <= 8; ++x) {
        const auto t = back_rank[static_cast<std::size_t>(x - 1)];
        pieces.push_back({t, Coordinate::at(x, 1), Colour::white});
        pieces.push_back({PieceType::pawn, Coordinate::at(x, 2), Colour::white});
        pieces.push_back({PieceType::pawn, Coordinate::at(x, 7), Colour::black});
        pieces.push_back({t, Coordinate::at(x, 8), Colour::black});
    }
    return Board(BoardState::from_pieces(pieces));
}

// ---------------------------------------------------------------------------
// Attacks

SquareSet attacked_squares(const BoardState& state, Colour by) {
    const auto os = state.obstacles();
    SquareSet out;
    for (const auto& p : state.pieces(by)) {
        if (p.type == PieceType::pawn) {
            for (int dx : {-1, 1})
                if (auto c = p.square.offset(dx, pawn_direction(by)))
                    out.insert(*c);
        } else {
            out |= type_based_moves(p, os);
        }
    }
    return out;
}

namespace {

bool holds(const BoardState& state, std::optional<Coordinate> c, Colour colour, PieceType a,
           PieceType b) {
    if (!c)
        return false;
    auto p = state.at(*c);
    return p && p->colour == colour && (p->type == a || p->type == b);
}

template <std::size_t N>
bool ray_hits(const BoardState& state, Coordinate from, const std::array<Direction, N>& dirs, Colour by,
              PieceType slider) {
    for (auto d : dirs) {
        auto c = from.offset(d.dx, d.dy);
        while (c && !state.occupied(*c))
            c = c->offset(d.dx, d.dy);
        if (holds(state, c, by, slider, PieceType::queen))
            return true;
    }
    return false;
}

}  // namespace

bool is_attacked(const BoardState& state, Coordinate square, Colour by) {
    // A pawn of colour `by` attacks forward-diagonally, so look backwards from the target.
    const int back = -pawn_direction(by);
    for (int dx : {-1, 1})
        if (holds(state, square.offset(dx, back), by, PieceType::pawn, PieceType::pawn))
            return true;
    for (auto d : kKnightOffsets)
        if (holds(state, square.offset(d.dx, d.dy), by, PieceType::knight, PieceType::knight))
            return true;
    for (auto d : kAllDirections)
        if (holds(state, square.offset(d.dx, d.dy), by, PieceType::king, PieceType::king))
            return true;
    return ray_hits(state, square, kOrthogonal, by, PieceType::rook) ||
           ray_hits(state, square, kDiagonal, by, PieceType::bishop);
}

bool in_check(const BoardState& state, Colour c) {
    auto king = state.king(c);
    if (!king)
        throw ContractViolation("in_check: no " + to_string(c) + " king on the board");
    return is_attacked(state, king->square, opposite_colour(c));
}

// ---------------------------------------------------------------------------
// Special moves

namespace {

void require_on_board(const BoardState& state, const Piece& p) {
    if (!state.contains(p))
        throw ContractViolation(to_string(p) + " is not on the board");
}

void require_type(const Piece& p, PieceType t) {
    if (p.type != t)
        throw ContractViolation(to_string(p) + " is not a " + to_string(t));
}

void normalise(MoveSet& moves) {
    std::sort(moves.begin(), moves.end());
    moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
}

int home_rank(Colour c) { return c == Colour::white ? 1 : 8; }

}  // namespace

MoveSet pawn_move_two(const BoardState& state, const Piece& pawn) {
    require_type(pawn, PieceType::pawn);
    require_on_board(state, pawn);
    const int start = pawn.colour == Colour::white ? 2 : 7;
    if (pawn.square.y() != start)
        return {};
    const int dy = pawn_direction(pawn.colour);
    const auto one = pawn.square.offset(0, dy);
    const auto two = pawn.square.offset(0, 2 * dy);
    if (state.occupied(*one) || state.occupied(*two))
        return {};
    return {Move(pawn, Piece{PieceType::pawn, *two, pawn.colour})};
}

MoveSet en_passant(const Board& board, const Piece& pawn) {
    require_type(pawn, PieceType::pawn);
    require_on_board(board.board_state(), pawn);
    const auto last = board.history().latest();
    if (!last)
        return {};
    const Piece& was = last->from();
    const Piece& now = last->to();
    if (was.type != PieceType::pawn || now.type != PieceType::pawn || now.colour == pawn.colour)
        return {};
    if (std::abs(now.square.y() - was.square.y()) != 2 || was.square.x() != now.square.x())
        return {};
    if (now.square.y() != pawn.square.y() || std::abs(now.square.x() - pawn.square.x()) != 1)
        return {};
    if (!board.board_state().contains(now))
        return {};
    const auto skipped = Coordinate::at(now.square.x(), (was.square.y() + now.square.y()) / 2);
    if (board.board_state().occupied(skipped))
        return {};
    return {Move(pawn, Piece{PieceType::pawn, skipped, pawn.colour})};
}

MoveSet pawn_promotion(const BoardState& state, const Piece& pawn) {
    require_type(pawn, PieceType::pawn);
    require_on_board(state, pawn);
    MoveSet out;
    for (auto c : type_based_moves(pawn, state.obstacles())) {
        if (c.y() != last_rank(pawn.colour))
            continue;
        for (auto t : kPromotableTypes)
            out.emplace_back(pawn, Piece{t, c, pawn.colour});
    }
    normalise(out);
    return out;
}

MoveSet castling_possible(const Board& board, const Piece& king) {
    require_type(king, PieceType::king);
    const auto& state = board.board_state();
    require_on_board(state, king);

    const int y = home_rank(king.colour);
    const auto home = Coordinate::at(5, y);
    if (king.square != home || board.history().touched(home))
        return {};
    const Colour enemy = opposite_colour(king.colour);
    if (is_attacked(state, home, enemy))
        return {};

    struct Side {
        int rook_x;
        int first_between;
        int last_between;
        int crossed_x;
        int king_to_x;
    };
    constexpr std::array<Side, 2> sides{{{8, 6, 7, 6, 7}, {1, 2, 4, 4, 3}}};

    MoveSet out;
    for (const auto& side : sides) {
        const auto corner = Coordinate::at(side.rook_x, y);
        if (!state.contains(Piece{PieceType::rook, corner, king.colour}) || board.history().touched(corner))
            continue;
        bool clear = true;
        for (int x = side.first_between; x <= side.last_between; ++x)
            clear = clear && !state.occupied(Coordinate::at(x, y));
        if (!clear)
            continue;
        const auto crossed = Coordinate::at(side.crossed_x, y);
        const auto target = Coordinate::at(side.king_to_x, y);
        if (is_attacked(state, crossed, enemy) || is_attacked(state, target, enemy))
            continue;
        out.emplace_back(king, Piece{PieceType::king, target, king.colour});
    }
    normalise(out);
    return out;
}

MoveSet stateful_possible_moves(const Board& board, const Piece& piece) {
    require_on_board(board.board_state(), piece);
    switch (piece.type) {
        case PieceType::pawn: {
            MoveSet out = pawn_move_two(board.board_state(), piece);
            for (auto&& set : {en_passant(board, piece), pawn_promotion(board.board_state(), piece)})
                out.insert(out.end(), set.begin(), set.end());
            normalise(out);
            return out;
        }
        case PieceType::king: return castling_possible(board, piece);
        default: return {};
    }
}

// ---------------------------------------------------------------------------
// Legality

namespace {

enum class MoveKind { other, castling, en_passant };

MoveKind classify(const BoardState& state, const Move& m) {
    const int dx = m.to().square.x() - m.from().square.x();
    if (m.from().type == PieceType::king && std::abs(dx) == 2)
        return MoveKind::castling;
    if (m.from().type == PieceType::pawn && dx != 0 && !state.occupied(m.to().square))
        return MoveKind::en_passant;
    return MoveKind::other;
}

BoardState state_after(const BoardState& state, const Move& m, MoveKind kind) {
    switch (kind) {
        case MoveKind::castling: {
            const int y = m.from().square.y();
            const bool kingside = m.to().square.x() > m.from().square.x();
            const auto rook_from = Coordinate::at(kingside ? 8 : 1, y);
            const auto rook_to = Coordinate::at(kingside ? 6 : 4, y);
            return state.edited({m.from().square, rook_from},
                                {m.to(), Piece{PieceType::rook, rook_to, m.from().colour}});
        }
        case MoveKind::en_passant: {
            const auto captured = Coordinate::at(m.to().square.x(), m.from().square.y());
            return state.edited({m.from().square, captured}, {m.to()});
        }
        case MoveKind::other: break;
    }
    return state.edited({m.from().square, m.to().square}, {m.to()});
}

Board apply(const Board& board, const Move& m, MoveKind kind) {
    return Board(state_after(board.board_state(), m, kind), board.history().prepend(m));
}

MoveSet candidates(const Board& board, const Piece& piece) {
    MoveSet out = stateful_possible_moves(board, piece);
    for (auto c : type_based_moves(piece, board.board_state().obstacles()))
        out.emplace_back(piece, Piece{piece.type, c, piece.colour});
    normalise(out);
    return out;
}

bool is_impossible(const BoardState& state, const Move& m) {
    const Colour mover = m.from().colour;
    if (m.from().type == PieceType::pawn && m.to().type == PieceType::pawn &&
        m.to().square.y() == last_rank(mover))
        return true;
    if (!state.king(mover))
        return false;
    return in_check(state_after(state, m, classify(state, m)), mover);
}

void require_legal(const Board& board, const Move& m) {
    require_on_board(board.board_state(), m.from());
    const auto legal = possible_moves(board, m.from());
    if (!std::binary_search(legal.begin(), legal.end(), m))
        throw ContractViolation("illegal move " + to_uci(m));
}

}  // namespace

MoveSet stateful_impossible_moves(const Board& board, const Piece& piece) {
    MoveSet out = candidates(board, piece);
    std::erase_if(out, [&](const Move& m) { return !is_impossible(board.board_state(), m); });
    return out;
}

MoveSet possible_moves(const Board& board, const Piece& piece) {
    MoveSet out = candidates(board, piece);
    std::erase_if(out, [&](const Move& m) { return is_impossible(board.board_state(), m); });
    return out;
}

MoveSet legal_moves(const Board& board, Colour c) {
    MoveSet out;
    for (const auto& p : board.board_state().pieces(c)) {
        auto moves = possible_moves(board, p);
        out.insert(out.end(), moves.begin(), moves.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool iss_castling(const Board& board, const Move& mov) {
    require_on_board(board.board_state(), mov.from());
    return mov.from().type == PieceType::king &&
           std::abs(mov.to().square.x() - mov.from().square.x()) == 2;
}

bool iss_en_passant(const Board& board, const Move& mov) {
    require_on_board(board.board_state(), mov.from());
    return mov.from().type == PieceType::pawn && mov.to().square.x() != mov.from().square.x() &&
           !board.board_state().occupied(mov.to().square);
}

Board move(const Board& board, const Move& mov) {
    require_legal(board, mov);
    return apply(board, mov, classify(board.board_state(), mov));
}

Board move_other(const Board& board, const Move& mov) {
    require_legal(board, mov);
    require(classify(board.board_state(), mov) == MoveKind::other,
            "move_other: castling and en passant have their own transition");
    return apply(board, mov, MoveKind::other);
}

Board move_castling(const Board& board, const Move& mov) {
    require_legal(board, mov);
    require(iss_castling(board, mov), "move_castling: not a castling move");
    return apply(board, mov, MoveKind::castling);
}

Board move_en_passant(const Board& board, const Move& mov) {
    require_legal(board, mov);
    require(iss_en_passant(board, mov), "move_en_passant: not an en passant capture");
    return apply(board, mov, MoveKind::en_passant);
}

// ---------------------------------------------------------------------------
// perft

namespace {

std::uint64_t count_leaves(const Board& board, Colour to_move, int depth) {
    const auto moves = legal_moves(board, to_move);
    if (depth == 1)
        return moves.size();
    std::uint64_t total = 0;
    for (const auto& m : moves)
        total += count_leaves(apply(board, m, classify(board.board_state(), m)), opposite_colour(to_move),
                              depth - 1);
    return total;
}

}  // namespace

std::uint64_t perft(const Board& board, Colour to_move, int depth) {
    require(depth >= 0, "perft depth must be non-negative");
    if (depth == 0)
        return 1;
    return count_leaves(board, to_move, depth);
}

std::vector<std::pair<Move, std::uint64_t>> perft_divide(const Board& board, Colour to_move, int depth) {
    require(depth >= 1, "perft divide needs depth >= 1");
    std::vector<std::pair<Move, std::uint64_t>> out;
    for (const auto& m : legal_moves(board, to_move)) {
        const auto next = apply(board, m, classify(board.board_state(), m));
        out.emplace_back(m, perft(next, opposite_colour(to_move), depth - 1));
    }
    return out;
}

std::string to_uci(const Move& m) {
    std::string s = m.from().square.name() + m.to().square.name();
    if (m.is_promotion()) {
        switch (m.to().type) {
            case PieceType::knight: s += 'n'; break;
            case PieceType::bishop: s += 'b'; break;
            case PieceType::rook: s += 'r'; break;
            default: s += 'q'; break;
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Move& m) { return os << to_uci(m); }

}  // namespace purechess
