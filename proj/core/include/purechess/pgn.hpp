#pragma once

/// @file pgn.hpp
/// Portable Game Notation: reading movetext into SAN tokens, resolving those
/// tokens against a live game, and writing games back out.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "purechess/game.hpp"

namespace purechess::pgn {

// ---------------------------------------------------------------------------
// Character maps. Each is injective, so the inverse functions are total on
// the forward map's range.

struct CharMaps {
    std::map<char, int> files;                // 'a'..'h' -> 1..8
    std::map<char, int> ranks;                // '1'..'8' -> 1..8
    std::map<PieceType, std::string> pieces;  // pawn -> "", rook -> "R", ...
};

[[nodiscard]] const CharMaps& char_maps();

[[nodiscard]] std::optional<int> file_from_char(char c) noexcept;
[[nodiscard]] std::optional<int> rank_from_char(char c) noexcept;
/// Requires 1 <= x <= 8.
[[nodiscard]] char file_to_char(int x);
/// Requires 1 <= y <= 8.
[[nodiscard]] char rank_to_char(int y);
[[nodiscard]] std::string_view piece_letter(PieceType t) noexcept;
/// Upper-case letters only; the pawn has no letter.
[[nodiscard]] std::optional<PieceType> piece_from_letter(char c) noexcept;

// ---------------------------------------------------------------------------
// SAN tokens

enum class SanKind { normal, kingside_castle, queenside_castle };
enum class CheckMark { none, check, mate };

/// One SAN move as written, before it is matched against a position.
struct SanToken {
    SanKind kind = SanKind::normal;
    PieceType piece_type = PieceType::pawn;
    std::optional<Coordinate> target;  // empty for castling
    bool is_capture = false;
    std::optional<PieceType> promotion;
    std::optional<int> disambiguation_file;
    std::optional<int> disambiguation_rank;
    CheckMark check_mark = CheckMark::none;

    bool operator==(const SanToken&) const = default;
};

/// Parses one SAN move ("Nbd7", "exd8=Q+", "O-O-O#"). Trailing "!"/"?"
/// annotations are ignored. Returns nothing when the text is not SAN.
[[nodiscard]] std::optional<SanToken> parse_san(std::string_view text);

/// Canonical SAN spelling of a token.
[[nodiscard]] std::string to_string(const SanToken& token);

// ---------------------------------------------------------------------------
// Games

enum class GameResult { white_wins, black_wins, draw, unknown };

[[nodiscard]] std::string_view result_marker(GameResult r) noexcept;
[[nodiscard]] std::optional<GameResult> parse_result_marker(std::string_view text) noexcept;
[[nodiscard]] GameResult result_from_winner(const Winner& w) noexcept;

using Tag = std::pair<std::string, std::string>;

/// Where a token came from, for error messages.
struct TokenLocation {
    int line = 0;
    int column = 0;
    std::string lexeme;
};

struct PgnGame {
    std::vector<Tag> tags;  // in file order
    std::vector<SanToken> tokens;
    std::vector<TokenLocation> locations;  // parallel to tokens
    GameResult result = GameResult::unknown;

    [[nodiscard]] std::optional<std::string> tag(std::string_view name) const;
};

/// Syntax error in PGN text.
class PgnError : public std::runtime_error {
public:
    PgnError(int line, int column, std::string lexeme, std::string reason);

    [[nodiscard]] int line() const noexcept { return line_; }
    [[nodiscard]] int column() const noexcept { return column_; }
    [[nodiscard]] const std::string& lexeme() const noexcept { return lexeme_; }
    [[nodiscard]] const std::string& reason() const noexcept { return reason_; }

private:
    int line_;
    int column_;
    std::string lexeme_;
    std::string reason_;
};

/// Splits PGN text into games. Accepts LF or CRLF line ends, a UTF-8 byte
/// order mark, brace and semicolon comments, "%" escape lines, NAGs ($n),
/// move numbers ("12." and "12...", with or without a following space) and
/// "!"/"?" suffixes. Every game must end in a result marker. Recursive
/// variations are rejected. Throws PgnError.
[[nodiscard]] std::vector<PgnGame> parse_pgn(std::string_view text);

// ---------------------------------------------------------------------------
// Resolution and serialisation

enum class SanErrorKind { illegal, ambiguous, check_mark_mismatch };

class SanError : public std::runtime_error {
public:
    SanError(SanErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] SanErrorKind kind() const noexcept { return kind_; }

private:
    SanErrorKind kind_;
};

/// The unique legal move of the side to move that the token describes. A
/// "+" or "#" on the token must hold after the move. Throws SanError.
[[nodiscard]] Move resolve_san(const SanToken& token, const Game& game);

/// Minimal SAN for a legal move of the side to move, with "+"/"#" suffix.
/// Throws ContractViolation for an illegal move.
[[nodiscard]] std::string move_to_pgn_string(const Move& move, const Game& game);

/// Export-format text for one game played from the initial position: the
/// seven-tag roster first (missing entries filled with "?"), remaining tags
/// in the given order, then numbered movetext wrapped below 80 columns.
/// Throws ContractViolation if the moves cannot be replayed.
[[nodiscard]] std::string serialize_game(std::span<const Tag> tags, std::span<const Move> moves,
                                         GameResult result);

/// Failure to replay a parsed game. `ply` is 1-based.
class ReplayError : public std::runtime_error {
public:
    ReplayError(std::size_t ply, std::string lexeme, std::string reason);

    [[nodiscard]] std::size_t ply() const noexcept { return ply_; }
    [[nodiscard]] const std::string& lexeme() const noexcept { return lexeme_; }
    [[nodiscard]] const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t ply_;
    std::string lexeme_;
    std::string reason_;
};

struct Replay {
    std::vector<Move> moves;
    std::vector<Game> positions;  // positions[i] is the game before moves[i]; back() is final
    Winner winner;                // set when the last move ended the game
};

/// Plays every token from the initial position. Throws ReplayError.
[[nodiscard]] Replay replay(const PgnGame& game);

}  // namespace purechess::pgn
