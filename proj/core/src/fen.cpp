#include "purechess/fen.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace purechess {

namespace {

std::optional<PieceType> type_from_fen(char c) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
        case 'p': return PieceType::pawn;
        case 'n': return PieceType::knight;
        case 'b': return PieceType::bishop;
        case 'r': return PieceType::rook;
        case 'q': return PieceType::queen;
        case 'k': return PieceType::king;
        default: return std::nullopt;
    }
}

char fen_char(const Piece& p) {
    char c = 'p';
    switch (p.type) {
        case PieceType::pawn: c = 'p'; break;
        case PieceType::knight: c = 'n'; break;
        case PieceType::bishop: c = 'b'; break;
        case PieceType::rook: c = 'r'; break;
        case PieceType::queen: c = 'q'; break;
        case PieceType::king: c = 'k'; break;
    }
    return p.colour == Colour::white ? static_cast<char>(std::toupper(c)) : c;
}

std::vector<Piece> read_placement(std::string_view placement) {
    std::vector<Piece> pieces;
    int y = 8;
    int x = 1;
    for (char c : placement) {
        if (c == '/') {
            if (x != 9)
                throw FenError("rank " + std::to_string(y) + " does not cover 8 files");
            --y;
            x = 1;
            if (y < 1)
                throw FenError("more than 8 ranks");
        } else if (c >= '1' && c <= '8') {
            x += c - '0';
            if (x > 9)
                throw FenError("rank " + std::to_string(y) + " is longer than 8 files");
        } else if (auto t = type_from_fen(c)) {
            if (x > 8)
                throw FenError("rank " + std::to_string(y) + " is longer than 8 files");
            const Colour colour = std::isupper(static_cast<unsigned char>(c)) ? Colour::white : Colour::black;
            if (*t == PieceType::pawn && (y == 1 || y == 8))
                throw FenError("pawn on rank " + std::to_string(y));
            pieces.push_back({*t, Coordinate::at(x, y), colour});
            ++x;
        } else {
            throw FenError(std::string("unexpected character '") + c + "' in piece placement");
        }
    }
    if (y != 1 || x != 9)
        throw FenError("piece placement must describe exactly 8 ranks of 8 files");
    return pieces;
}

// Synthetic moves that revoke the castling rights `rights` does not grant.
History revoke_castling(const BoardState& state, std::string_view rights, History history) {
    if (rights != "-")
        for (char c : rights)
            if (std::string_view("KQkq").find(c) == std::string_view::npos)
                throw FenError(std::string("unsupported castling field character '") + c + "'");

    for (Colour colour : {Colour::white, Colour::black}) {
        const bool white = colour == Colour::white;
        const int home = white ? 1 : 8;
        const int off = white ? 2 : 7;
        const char kingside = white ? 'K' : 'k';
        const char queenside = white ? 'Q' : 'q';
        const bool keep_k = rights.find(kingside) != std::string_view::npos;
        const bool keep_q = rights.find(queenside) != std::string_view::npos;

        const Piece king{PieceType::king, Coordinate::at(5, home), colour};
        if (!state.contains(king)) {
            if (keep_k || keep_q)
                throw FenError(std::string("castling right granted but the ") + to_string(colour) +
                               " king is not on its home square");
            continue;
        }
        if (!keep_k && !keep_q) {
            history = history.prepend(Move(king, Piece{PieceType::king, Coordinate::at(5, off), colour}));
            continue;
        }
        for (auto [rook_x, keep] : {std::pair{8, keep_k}, std::pair{1, keep_q}}) {
            const Piece rook{PieceType::rook, Coordinate::at(rook_x, home), colour};
            if (!state.contains(rook)) {
                if (keep)
                    throw FenError("castling right granted but the rook is not on " + rook.square.name());
                continue;
            }
            if (!keep)
                history = history.prepend(Move(rook, Piece{PieceType::rook, Coordinate::at(rook_x, off), colour}));
        }
    }
    return history;
}

History double_push(const BoardState& state, std::string_view square, Colour to_move, History history) {
    if (square == "-")
        return history;
    if (square.size() != 2 || square[0] < 'a' || square[0] > 'h')
        throw FenError("bad en passant square '" + std::string(square) + "'");
    const int x = square[0] - 'a' + 1;
    const int y = square[1] - '0';
    const Colour pusher = opposite_colour(to_move);
    const int expected = pusher == Colour::white ? 3 : 6;
    if (y != expected)
        throw FenError("en passant square " + std::string(square) + " is on the wrong rank");
    const int dy = pawn_direction(pusher);
    const Piece landed{PieceType::pawn, Coordinate::at(x, y + dy), pusher};
    if (!state.contains(landed) || state.occupied(Coordinate::at(x, y)) ||
        state.occupied(Coordinate::at(x, y - dy)))
        throw FenError("en passant square " + std::string(square) + " does not follow a double pawn push");
    return history.prepend(Move(Piece{PieceType::pawn, Coordinate::at(x, y - dy), pusher}, landed));
}

}  // namespace

Game parse_fen(std::string_view fen) {
    std::istringstream in{std::string(fen)};
    std::string placement, side, castling, ep, halfmove, fullmove, extra;
    in >> placement >> side;
    if (placement.empty() || side.empty())
        throw FenError("FEN needs at least a piece placement and a side to move");
    in >> castling >> ep >> halfmove >> fullmove >> extra;
    if (!extra.empty())
        throw FenError("trailing text after FEN fields");
    for (const auto& clock : {halfmove, fullmove})
        for (char c : clock)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw FenError("move counters must be numbers");

    Colour to_move;
    if (side == "w")
        to_move = Colour::white;
    else if (side == "b")
        to_move = Colour::black;
    else
        throw FenError("side to move must be 'w' or 'b'");

    const auto pieces = read_placement(placement);
    if (pieces.empty())
        throw FenError("empty board");
    BoardState state = [&] {
        try {
            return BoardState::from_pieces(pieces);
        } catch (const ContractViolation& e) {
            throw FenError(e.what());
        }
    }();

    History history;
    if (!castling.empty())
        history = revoke_castling(state, castling, history);
    if (!ep.empty())
        history = double_push(state, ep, to_move, history);
    return Game{Board(std::move(state), std::move(history)), to_move};
}

std::string placement_fen(const Game& game) {
    std::string out;
    for (int y = 8; y >= 1; --y) {
        int empty = 0;
        for (int x = 1; x <= 8; ++x) {
            auto p = game.board.board_state().at(Coordinate::at(x, y));
            if (!p) {
                ++empty;
                continue;
            }
            if (empty)
                out += static_cast<char>('0' + empty);
            empty = 0;
            out += fen_char(*p);
        }
        if (empty)
            out += static_cast<char>('0' + empty);
        if (y > 1)
            out += '/';
    }
    out += game.turn == Colour::white ? " w" : " b";
    return out;
}

}  // namespace purechess
