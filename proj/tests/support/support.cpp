#include "support/support.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace support {

Piece white(PieceType t, int x, int y) { return Piece{t, Coordinate::at(x, y), Colour::white}; }
Piece black(PieceType t, int x, int y) { return Piece{t, Coordinate::at(x, y), Colour::black}; }
Coordinate sq(int x, int y) { return Coordinate::at(x, y); }

Move mv(const Piece& from, int x, int y) { return Move(from, Piece{from.type, sq(x, y), from.colour}); }

Move promote(const Piece& from, int x, int y, PieceType t) { return Move(from, Piece{t, sq(x, y), from.colour}); }

Board board_of(std::initializer_list<Piece> pieces, std::initializer_list<Move> played) {
    History h;
    for (const auto& m : played)
        h = h.prepend(m);
    return Board(BoardState::from_pieces(pieces), h);
}

Game play_uci(std::initializer_list<const char*> moves) {
    Game g = new_game();
    for (std::string text : moves) {
        bool found = false;
        for (const auto& m : legal_moves(g.board, g.turn)) {
            std::string uci = to_uci(m);
            if (uci == text) {
                g = game_move(g, m).game;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("not a legal move: " + text);
    }
    return g;
}

namespace {

char letter(PieceType t) {
    switch (t) {
        case PieceType::pawn: return 'P';
        case PieceType::knight: return 'N';
        case PieceType::bishop: return 'B';
        case PieceType::rook: return 'R';
        case PieceType::queen: return 'Q';
        case PieceType::king: return 'K';
    }
    return '?';
}

int side(Colour c) { return c == Colour::white ? oracle::kWhite : oracle::kBlack; }

}  // namespace

oracle::Position to_oracle(const Board& board, Colour to_move) {
    oracle::Position pos;
    for (const auto& p : board.board_state().pieces())
        pos.cells[p.square.index()] = oracle::Cell{letter(p.type), side(p.colour)};
    pos.to_move = side(to_move);
    for (const auto& m : board.history().chronological())
        pos.history.emplace_back(m.from().square.index(), m.to().square.index());
    return pos;
}

oracle::OMove to_oracle(const Move& m) {
    return oracle::OMove{m.from().square.index(), m.to().square.index(),
                         m.is_promotion() ? letter(m.to().type) : '\0'};
}

std::vector<oracle::OMove> to_oracle(const MoveSet& moves) {
    std::vector<oracle::OMove> out;
    for (const auto& m : moves)
        out.push_back(to_oracle(m));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

constexpr std::array<PieceType, 5> kNonKing{PieceType::pawn, PieceType::knight, PieceType::bishop,
                                            PieceType::rook, PieceType::queen};

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool chance(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Position random_small_position(std::mt19937_64& rng, int max_pieces) {
    for (;;) {
        std::vector<Piece> pieces;
        std::set<int> used;
        auto free_at = [&](int x, int y) { return !used.count((y - 1) * 8 + (x - 1)); };
        auto put = [&](const Piece& p) {
            used.insert(p.square.index());
            pieces.push_back(p);
        };
        History history;
        const Colour to_move = chance(rng, 0.5) ? Colour::white : Colour::black;
        const int scenario = uniform(rng, 0, 9);  // 0-2 castling, 3-4 en passant, rest random

        if (scenario <= 2) {
            put(white(PieceType::king, 5, 1));
            put(black(PieceType::king, 5, 8));
            for (int y : {1, 8})
                for (int x : {1, 8})
                    if (static_cast<int>(pieces.size()) < max_pieces && chance(rng, 0.6))
                        put(Piece{PieceType::rook, sq(x, y), y == 1 ? Colour::white : Colour::black});
            const int touches = uniform(rng, 0, 2);
            for (int i = 0; i < touches; ++i) {
                const int x = std::array{1, 5, 8}[uniform(rng, 0, 2)];
                const int y = chance(rng, 0.5) ? 1 : 8;
                const Colour c = y == 1 ? Colour::white : Colour::black;
                const PieceType t = x == 5 ? PieceType::king : PieceType::rook;
                const int y2 = y == 1 ? 2 : 7;
                history = history.prepend(
                    chance(rng, 0.5) ? Move(Piece{t, sq(x, y), c}, Piece{t, sq(x, y2), c})
                                     : Move(Piece{t, sq(x, y2), c}, Piece{t, sq(x, y), c}));
            }
        } else {
            for (Colour c : {Colour::white, Colour::black}) {
                for (;;) {
                    const int x = uniform(rng, 1, 8), y = uniform(rng, 1, 8);
                    if (free_at(x, y)) {
                        put(Piece{PieceType::king, sq(x, y), c});
                        break;
                    }
                }
            }
        }

        if (scenario == 3 || scenario == 4) {
            // Mover's pawn beside an enemy pawn that just advanced two squares.
            const Colour pusher = opposite_colour(to_move);
            const int y = pusher == Colour::white ? 4 : 5;
            const int from_y = pusher == Colour::white ? 2 : 7;
            const int skipped = pusher == Colour::white ? 3 : 6;
            const int x = uniform(rng, 1, 8);
            const int nx = x + (chance(rng, 0.5) ? 1 : -1);
            if (nx >= 1 && nx <= 8 && free_at(x, y) && free_at(nx, y) && free_at(x, skipped) &&
                free_at(x, from_y) && static_cast<int>(pieces.size()) + 2 <= max_pieces) {
                put(Piece{PieceType::pawn, sq(x, y), pusher});
                put(Piece{PieceType::pawn, sq(nx, y), to_move});
                history = history.prepend(Move(Piece{PieceType::pawn, sq(x, from_y), pusher},
                                               Piece{PieceType::pawn, sq(x, y), pusher}));
            }
        }

        const int extra = uniform(rng, 0, max_pieces - static_cast<int>(pieces.size()));
        for (int i = 0; i < extra; ++i) {
            const PieceType t = kNonKing[static_cast<std::size_t>(uniform(rng, 0, 4))];
            const int x = uniform(rng, 1, 8);
            const int y = t == PieceType::pawn ? uniform(rng, 2, 7) : uniform(rng, 1, 8);
            if (!free_at(x, y))
                continue;
            put(Piece{t, sq(x, y), chance(rng, 0.5) ? Colour::white : Colour::black});
        }

        Board board(BoardState::from_pieces(pieces), history);
        if (oracle::king_in_check(to_oracle(board, to_move), side(opposite_colour(to_move))))
            continue;
        return Position{board, to_move};
    }
}

std::string compare_with_oracle(const Position& pos) {
    const auto opos = to_oracle(pos.board, pos.to_move);
    for (const auto& p : pos.board.board_state().pieces(pos.to_move)) {
        const auto got = to_oracle(possible_moves(pos.board, p));
        const auto want = oracle::moves_from(opos, p.square.index());
        if (got == want)
            continue;
        std::ostringstream os;
        os << "piece " << p << " engine {";
        for (const auto& m : possible_moves(pos.board, p))
            os << ' ' << to_uci(m);
        os << " } oracle {";
        for (const auto& m : want)
            os << ' ' << Coordinate::from_index(m.from).name() << Coordinate::from_index(m.to).name()
               << (m.promo ? std::string(1, m.promo) : "");
        os << " }\n" << describe(pos.board);
        return os.str();
    }
    return {};
}

std::string check_step(const Game& prev, const Move& m, const GameMoveResult& next) {
    const auto& state = next.game.board.board_state();
    const auto pieces = state.pieces();
    std::set<int> squares;
    int kings[2] = {0, 0};
    int pawns[2] = {0, 0};
    for (const auto& p : pieces) {
        squares.insert(p.square.index());
        const int s = side(p.colour);
        if (p.type == PieceType::king)
            ++kings[s];
        if (p.type == PieceType::pawn) {
            ++pawns[s];
            if (p.square.y() == 1 || p.square.y() == 8)
                return "pawn on a last rank: " + to_string(p);
        }
    }
    if (squares.size() != pieces.size() || pieces.size() != state.size())
        return "two pieces share a square";
    if (kings[0] != 1 || kings[1] != 1)
        return "king count is not one per colour";
    if (pawns[0] > 8 || pawns[1] > 8)
        return "more than eight pawns";
    const auto& h = next.game.board.history();
    if (h.size() != prev.board.history().size() + 1)
        return "history did not grow by one";
    if (h.latest() != m)
        return "history head is not the played move";
    const auto delta = static_cast<long>(prev.board.board_state().size()) - static_cast<long>(state.size());
    if (delta != 0 && delta != 1)
        return "piece count changed by " + std::to_string(delta);
    if (oracle::king_in_check(to_oracle(next.game.board, next.game.turn), side(m.from().colour)))
        return "mover left in check after " + to_uci(m);
    return {};
}

std::string describe(const Board& board) {
    std::string out;
    for (int y = 8; y >= 1; --y) {
        for (int x = 1; x <= 8; ++x) {
            const auto p = board.board_state().at(sq(x, y));
            char c = p ? letter(p->type) : '.';
            if (p && p->colour == Colour::black)
                c = static_cast<char>(c - 'A' + 'a');
            out += c;
        }
        out += '\n';
    }
    out += "history:";
    for (const auto& m : board.history().chronological())
        out += ' ' + to_uci(m);
    out += '\n';
    return out;
}

}  // namespace support
