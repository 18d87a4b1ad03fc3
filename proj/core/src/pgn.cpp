#include "purechess/pgn.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace purechess::pgn {

// ---------------------------------------------------------------------------
// Character maps

namespace {

constexpr std::string_view kFileChars = "abcdefgh";
constexpr std::string_view kRankChars = "12345678";

}  // namespace

std::optional<int> file_from_char(char c) noexcept {
    const auto i = kFileChars.find(c);
    if (i == std::string_view::npos)
        return std::nullopt;
    return static_cast<int>(i) + 1;
}

std::optional<int> rank_from_char(char c) noexcept {
    const auto i = kRankChars.find(c);
    if (i == std::string_view::npos)
        return std::nullopt;
    return static_cast<int>(i) + 1;
}

char file_to_char(int x) {
    require(x >= 1 && x <= 8, "file out of range");
    return kFileChars[static_cast<std::size_t>(x - 1)];
}

char rank_to_char(int y) {
    require(y >= 1 && y <= 8, "rank out of range");
    return kRankChars[static_cast<std::size_t>(y - 1)];
}

std::string_view piece_letter(PieceType t) noexcept {
    switch (t) {
        case PieceType::pawn: return "";
        case PieceType::rook: return "R";
        case PieceType::knight: return "N";
        case PieceType::bishop: return "B";
        case PieceType::queen: return "Q";
        case PieceType::king: return "K";
    }
    return "";
}

std::optional<PieceType> piece_from_letter(char c) noexcept {
    for (auto t : kAllPieceTypes) {
        const auto letter = piece_letter(t);
        if (!letter.empty() && letter.front() == c)
            return t;
    }
    return std::nullopt;
}

const CharMaps& char_maps() {
    static const CharMaps maps = [] {
        CharMaps m;
        for (char c : kFileChars)
            m.files.emplace(c, *file_from_char(c));
        for (char c : kRankChars)
            m.ranks.emplace(c, *rank_from_char(c));
        for (auto t : kAllPieceTypes)
            m.pieces.emplace(t, std::string(piece_letter(t)));
        return m;
    }();
    return maps;
}

// ---------------------------------------------------------------------------
// SAN tokens

std::optional<SanToken> parse_san(std::string_view s) {
    while (!s.empty() && (s.back() == '!' || s.back() == '?'))
        s.remove_suffix(1);

    SanToken t;
    if (!s.empty() && s.back() == '#') {
        t.check_mark = CheckMark::mate;
        s.remove_suffix(1);
    } else if (!s.empty() && s.back() == '+') {
        t.check_mark = CheckMark::check;
        s.remove_suffix(1);
    }

    if (s == "O-O" || s == "0-0") {
        t.kind = SanKind::kingside_castle;
        t.piece_type = PieceType::king;
        return t;
    }
    if (s == "O-O-O" || s == "0-0-0") {
        t.kind = SanKind::queenside_castle;
        t.piece_type = PieceType::king;
        return t;
    }
    if (s.empty())
        return std::nullopt;

    if (auto pt = piece_from_letter(s.front())) {
        t.piece_type = *pt;
        s.remove_prefix(1);
    }

    if (t.piece_type == PieceType::pawn && s.size() >= 2) {
        const char last = s.back();
        auto promo = piece_from_letter(last);
        if (promo && is_promotable(*promo)) {
            t.promotion = promo;
            s.remove_suffix(1);
            if (!s.empty() && s.back() == '=')
                s.remove_suffix(1);
        }
    }

    if (s.size() < 2)
        return std::nullopt;
    const auto tx = file_from_char(s[s.size() - 2]);
    const auto ty = rank_from_char(s[s.size() - 1]);
    if (!tx || !ty)
        return std::nullopt;
    t.target = Coordinate::make(*tx, *ty);
    s.remove_suffix(2);

    if (!s.empty() && s.back() == 'x') {
        t.is_capture = true;
        s.remove_suffix(1);
    }
    if (!s.empty()) {
        if (auto f = file_from_char(s.front())) {
            t.disambiguation_file = f;
            s.remove_prefix(1);
        }
    }
    if (!s.empty()) {
        if (auto r = rank_from_char(s.front())) {
            t.disambiguation_rank = r;
            s.remove_prefix(1);
        }
    }
    if (!s.empty())
        return std::nullopt;

    if (t.piece_type == PieceType::pawn) {
        // Pawn captures name the origin file; pushes name nothing.
        if (t.disambiguation_rank || t.is_capture != t.disambiguation_file.has_value())
            return std::nullopt;
        if (t.promotion && t.target->y() != 1 && t.target->y() != 8)
            return std::nullopt;
    }
    return t;
}

std::string to_string(const SanToken& t) {
    std::string s;
    if (t.kind == SanKind::kingside_castle) {
        s = "O-O";
    } else if (t.kind == SanKind::queenside_castle) {
        s = "O-O-O";
    } else {
        s += piece_letter(t.piece_type);
        if (t.disambiguation_file)
            s += file_to_char(*t.disambiguation_file);
        if (t.disambiguation_rank)
            s += rank_to_char(*t.disambiguation_rank);
        if (t.is_capture)
            s += 'x';
        if (t.target)
            s += t.target->name();
        if (t.promotion) {
            s += '=';
            s += piece_letter(*t.promotion);
        }
    }
    if (t.check_mark == CheckMark::check)
        s += '+';
    else if (t.check_mark == CheckMark::mate)
        s += '#';
    return s;
}

// ---------------------------------------------------------------------------
// Results and tags

std::string_view result_marker(GameResult r) noexcept {
    switch (r) {
        case GameResult::white_wins: return "1-0";
        case GameResult::black_wins: return "0-1";
        case GameResult::draw: return "1/2-1/2";
        case GameResult::unknown: return "*";
    }
    return "*";
}

std::optional<GameResult> parse_result_marker(std::string_view text) noexcept {
    if (text == "1-0")
        return GameResult::white_wins;
    if (text == "0-1")
        return GameResult::black_wins;
    if (text == "1/2-1/2")
        return GameResult::draw;
    if (text == "*")
        return GameResult::unknown;
    return std::nullopt;
}

GameResult result_from_winner(const Winner& w) noexcept {
    if (!w)
        return GameResult::unknown;
    if (std::holds_alternative<Remis>(*w))
        return GameResult::draw;
    return std::get<Colour>(*w) == Colour::white ? GameResult::white_wins : GameResult::black_wins;
}

std::optional<std::string> PgnGame::tag(std::string_view name) const {
    for (const auto& [k, v] : tags)
        if (k == name)
            return v;
    return std::nullopt;
}

PgnError::PgnError(int line, int column, std::string lexeme, std::string reason)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         reason + (lexeme.empty() ? std::string() : " ('" + lexeme + "')")),
      line_(line),
      column_(column),
      lexeme_(std::move(lexeme)),
      reason_(std::move(reason)) {}

// ---------------------------------------------------------------------------
// Reader

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool ends_symbol(char c) {
    return is_space(c) || c == '{' || c == '}' || c == '[' || c == ']' || c == '(' || c == ')' ||
           c == ';' || c == '$';
}

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {
        if (text_.substr(0, 3) == "\xEF\xBB\xBF")
            text_.remove_prefix(3);
    }

    std::vector<PgnGame> run() {
        while (!at_end()) {
            const char c = peek();
            if (is_space(c)) {
                advance();
            } else if ((c == '%' && column_ == 1) || c == ';') {
                skip_line();
            } else if (c == '{') {
                skip_brace_comment();
            } else if (c == '[') {
                if (!current_.tokens.empty())
                    fail(line_, column_, "[", "tag pair inside movetext (previous game has no result marker)");
                read_tag();
                open_ = true;
            } else if (c == '(') {
                fail(line_, column_, "(", "recursive variations are not supported");
            } else if (c == ')' || c == ']' || c == '}') {
                fail(line_, column_, std::string(1, c), "unexpected character");
            } else if (c == '$') {
                read_nag();
            } else {
                read_symbol();
            }
        }
        if (open_)
            fail(line_, column_, "", "game is missing its result marker");
        return std::move(games_);
    }

private:
    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    [[noreturn]] static void fail(int line, int column, std::string lexeme, std::string reason) {
        throw PgnError(line, column, std::move(lexeme), std::move(reason));
    }

    void skip_line() {
        while (!at_end() && peek() != '\n')
            advance();
    }

    void skip_brace_comment() {
        const int line = line_, column = column_;
        advance();
        while (!at_end() && peek() != '}')
            advance();
        if (at_end())
            fail(line, column, "{", "unterminated comment");
        advance();
    }

    void skip_blanks() {
        while (!at_end() && (peek() == ' ' || peek() == '\t'))
            advance();
    }

    void read_tag() {
        const int line = line_, column = column_;
        const std::size_t start = pos_;
        auto malformed = [&](const std::string& why) {
            const auto end = std::min(text_.size(), pos_ + 1);
            fail(line, column, std::string(text_.substr(start, end - start)), "malformed tag pair: " + why);
        };

        advance();
        skip_blanks();
        std::string name;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            name += peek();
            advance();
        }
        if (name.empty())
            malformed("expected a tag name");
        skip_blanks();
        if (at_end() || peek() != '"')
            malformed("expected a quoted value");
        advance();
        std::string value;
        while (true) {
            if (at_end() || peek() == '\n')
                malformed("unterminated tag value");
            char c = peek();
            if (c == '"') {
                advance();
                break;
            }
            if (c == '\\' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == '"' || text_[pos_ + 1] == '\\')) {
                advance();
                c = peek();
            }
            value += c;
            advance();
        }
        skip_blanks();
        if (at_end() || peek() != ']')
            malformed("expected ']'");
        advance();
        current_.tags.emplace_back(std::move(name), std::move(value));
    }

    void read_nag() {
        const int line = line_, column = column_;
        advance();
        bool digits = false;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits = true;
            advance();
        }
        if (!digits)
            fail(line, column, "$", "numeric annotation glyph without a number");
    }

    void read_symbol() {
        int line = line_, column = column_;
        const std::size_t start = pos_;
        while (!at_end() && !ends_symbol(peek()))
            advance();
        std::string_view sym = text_.substr(start, pos_ - start);

        if (auto result = parse_result_marker(sym)) {
            finish_game(*result, line, column, sym);
            return;
        }

        // Move number: "12", "12.", "12...", possibly glued to the move ("12.e4").
        std::size_t digits = 0;
        while (digits < sym.size() && std::isdigit(static_cast<unsigned char>(sym[digits])))
            ++digits;
        if (digits == sym.size())
            return;
        if (digits > 0 && sym[digits] == '.') {
            std::size_t rest = digits;
            while (rest < sym.size() && sym[rest] == '.')
                ++rest;
            sym.remove_prefix(rest);
            column += static_cast<int>(rest);
        }
        if (sym.find_first_not_of('.') == std::string_view::npos)
            return;

        auto token = parse_san(sym);
        if (!token)
            fail(line, column, std::string(sym), "unrecognized token");
        current_.tokens.push_back(*token);
        current_.locations.push_back({line, column, std::string(sym)});
        open_ = true;
    }

    void finish_game(GameResult result, int line, int column, std::string_view sym) {
        if (auto tagged = current_.tag("Result")) {
            auto expected = parse_result_marker(*tagged);
            if (expected && *expected != result)
                fail(line, column, std::string(sym),
                     "result marker contradicts the Result tag \"" + *tagged + "\"");
        }
        current_.result = result;
        games_.push_back(std::move(current_));
        current_ = PgnGame{};
        open_ = false;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    PgnGame current_;
    bool open_ = false;
    std::vector<PgnGame> games_;
};

}  // namespace

std::vector<PgnGame> parse_pgn(std::string_view text) { return Reader(text).run(); }

// ---------------------------------------------------------------------------
// Resolution

namespace {

bool captures(const Board& board, const Move& m) {
    return board.board_state().occupied(m.to().square) || iss_en_passant(board, m);
}

bool matches(const SanToken& t, const Board& board, const Move& m) {
    const int dx = m.to().square.x() - m.from().square.x();
    switch (t.kind) {
        case SanKind::kingside_castle: return m.from().type == PieceType::king && dx == 2;
        case SanKind::queenside_castle: return m.from().type == PieceType::king && dx == -2;
        case SanKind::normal: break;
    }
    if (m.from().type != t.piece_type || m.to().square != *t.target)
        return false;
    if (m.from().type == PieceType::king && std::abs(dx) == 2)
        return false;
    if (m.to().type != t.promotion.value_or(m.from().type))
        return false;
    if (t.disambiguation_file && m.from().square.x() != *t.disambiguation_file)
        return false;
    if (t.disambiguation_rank && m.from().square.y() != *t.disambiguation_rank)
        return false;
    return captures(board, m) == t.is_capture;
}

CheckMark mark_after(const GameMoveResult& r) {
    if (r.winner && std::holds_alternative<Colour>(*r.winner))
        return CheckMark::mate;
    const auto& state = r.game.board.board_state();
    const Colour defender = r.game.turn;
    if (state.king(defender) && in_check(state, defender))
        return CheckMark::check;
    return CheckMark::none;
}

}  // namespace

Move resolve_san(const SanToken& token, const Game& game) {
    std::optional<Move> found;
    for (const auto& m : legal_moves(game.board, game.turn)) {
        if (!matches(token, game.board, m))
            continue;
        if (found)
            throw SanError(SanErrorKind::ambiguous, "ambiguous move " + to_string(token) + " (" +
                                                        to_uci(*found) + " and " + to_uci(m) + ")");
        found = m;
    }
    if (!found)
        throw SanError(SanErrorKind::illegal,
                       "no legal " + to_string(game.turn) + " move matches " + to_string(token));

    if (token.check_mark != CheckMark::none) {
        const auto actual = mark_after(game_move(game, *found));
        const bool ok = token.check_mark == CheckMark::mate ? actual == CheckMark::mate
                                                            : actual != CheckMark::none;
        if (!ok)
            throw SanError(SanErrorKind::check_mark_mismatch,
                           to_string(token) + " claims " +
                               (token.check_mark == CheckMark::mate ? "checkmate" : "check") +
                               " but the position does not show it");
    }
    return *found;
}

std::string move_to_pgn_string(const Move& move, const Game& game) {
    const auto legal = legal_moves(game.board, game.turn);
    require(std::binary_search(legal.begin(), legal.end(), move), "move_to_pgn_string: illegal move " + to_uci(move));

    std::string s;
    const int dx = move.to().square.x() - move.from().square.x();
    if (move.from().type == PieceType::king && std::abs(dx) == 2) {
        s = dx > 0 ? "O-O" : "O-O-O";
    } else {
        const bool capture = captures(game.board, move);
        if (move.from().type == PieceType::pawn) {
            if (capture)
                s += file_to_char(move.from().square.x());
        } else {
            s += piece_letter(move.from().type);
            bool needed = false, file_clash = false, rank_clash = false;
            for (const auto& other : legal) {
                if (other.from().type != move.from().type || other.to() != move.to() ||
                    other.from().square == move.from().square)
                    continue;
                needed = true;
                file_clash = file_clash || other.from().square.x() == move.from().square.x();
                rank_clash = rank_clash || other.from().square.y() == move.from().square.y();
            }
            if (needed) {
                if (!file_clash) {
                    s += file_to_char(move.from().square.x());
                } else if (!rank_clash) {
                    s += rank_to_char(move.from().square.y());
                } else {
                    s += file_to_char(move.from().square.x());
                    s += rank_to_char(move.from().square.y());
                }
            }
        }
        if (capture)
            s += 'x';
        s += move.to().square.name();
        if (move.is_promotion()) {
            s += '=';
            s += piece_letter(move.to().type);
        }
    }

    switch (mark_after(game_move(game, move))) {
        case CheckMark::mate: s += '#'; break;
        case CheckMark::check: s += '+'; break;
        case CheckMark::none: break;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Serialisation

namespace {

constexpr std::array<std::string_view, 7> kSevenTagRoster{"Event", "Site",  "Date",  "Round",
                                                          "White", "Black", "Result"};

std::string escape_tag_value(std::string_view v) {
    std::string out;
    for (char c : v) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string serialize_game(std::span<const Tag> tags, std::span<const Move> moves, GameResult result) {
    std::vector<std::string> words;
    Game game = new_game();
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (game.turn == Colour::white)
            words.push_back(std::to_string(i / 2 + 1) + ".");
        try {
            words.push_back(move_to_pgn_string(moves[i], game));
            game = game_move(game, moves[i]).game;
        } catch (const ContractViolation& e) {
            throw ContractViolation("serialize_game: move " + std::to_string(i + 1) + " (" + to_uci(moves[i]) +
                                    ") cannot be replayed: " + e.what());
        }
    }
    words.emplace_back(result_marker(result));

    std::string out;
    auto lookup = [&](std::string_view name) -> std::optional<std::string> {
        for (const auto& [k, v] : tags)
            if (k == name)
                return v;
        return std::nullopt;
    };
    for (auto name : kSevenTagRoster) {
        std::string value;
        if (name == "Result")
            value = std::string(result_marker(result));
        else
            value = lookup(name).value_or(name == "Date" ? "????.??.??" : "?");
        out += "[" + std::string(name) + " \"" + escape_tag_value(value) + "\"]\n";
    }
    for (const auto& [k, v] : tags) {
        if (std::find(kSevenTagRoster.begin(), kSevenTagRoster.end(), k) != kSevenTagRoster.end())
            continue;
        out += "[" + k + " \"" + escape_tag_value(v) + "\"]\n";
    }
    out += '\n';

    std::string line;
    for (const auto& w : words) {
        if (!line.empty() && line.size() + 1 + w.size() > 79) {
            out += line + '\n';
            line.clear();
        }
        if (!line.empty())
            line += ' ';
        line += w;
    }
    out += line + '\n';
    return out;
}

// ---------------------------------------------------------------------------
// Replay

ReplayError::ReplayError(std::size_t ply, std::string lexeme, std::string reason)
    : std::runtime_error("ply " + std::to_string(ply) + " (" + lexeme + "): " + reason),
      ply_(ply),
      lexeme_(std::move(lexeme)),
      reason_(std::move(reason)) {}

Replay replay(const PgnGame& pgn) {
    Replay r;
    r.positions.push_back(new_game());
    for (std::size_t i = 0; i < pgn.tokens.size(); ++i) {
        const std::string lexeme = i < pgn.locations.size() ? pgn.locations[i].lexeme : to_string(pgn.tokens[i]);
        if (r.winner)
            throw ReplayError(i + 1, lexeme, "the game is already over (" + to_string(r.winner) + ")");
        const Game& current = r.positions.back();
        Move m = [&] {
            try {
                return resolve_san(pgn.tokens[i], current);
            } catch (const SanError& e) {
                throw ReplayError(i + 1, lexeme, e.what());
            }
        }();
        auto step = game_move(current, m);
        r.moves.push_back(m);
        r.winner = step.winner;
        r.positions.push_back(std::move(step.game));
    }
    return r;
}

}  // namespace purechess::pgn
