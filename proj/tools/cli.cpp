#include "cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "purechess/fen.hpp"
#include "purechess/pgn.hpp"

namespace purechess::cli {

namespace fs = std::filesystem;

std::string render_board(const BoardState& state) {
    std::string out;
    for (int y = 8; y >= 1; --y) {
        for (int x = 1; x <= 8; ++x) {
            const auto p = state.at(Coordinate::at(x, y));
            if (!p) {
                out += '.';
                continue;
            }
            char c = 'p';
            switch (p->type) {
                case PieceType::pawn: c = 'p'; break;
                case PieceType::rook: c = 'r'; break;
                case PieceType::knight: c = 'n'; break;
                case PieceType::bishop: c = 'b'; break;
                case PieceType::queen: c = 'q'; break;
                case PieceType::king: c = 'k'; break;
            }
            out += p->colour == Colour::white ? static_cast<char>(c - 'a' + 'A') : c;
        }
        out += '\n';
    }
    return out;
}

namespace {

class Style {
public:
    explicit Style(bool enabled) : enabled_(enabled) {}
    std::string ok(std::string_view s) const { return wrap("32", s); }
    std::string bad(std::string_view s) const { return wrap("31", s); }
    std::string warn(std::string_view s) const { return wrap("33", s); }

private:
    std::string wrap(std::string_view code, std::string_view s) const {
        if (!enabled_)
            return std::string(s);
        return "\x1b[" + std::string(code) + "m" + std::string(s) + "\x1b[0m";
    }
    bool enabled_;
};

bool colour_wanted(const std::ostream& out) {
    if (&out != &std::cout)
        return false;
    if (const char* no = std::getenv("NO_COLOR"); no && *no)
        return false;
    return ::isatty(STDOUT_FILENO) != 0;
}

std::optional<std::string> read_file(const fs::path& path, std::ostream& err) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
        err << "error: cannot read " << path.string() << ": not a readable file\n";
        return std::nullopt;
    }
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in && !in.eof()) {
        err << "error: cannot read " << path.string() << "\n";
        return std::nullopt;
    }
    if (in.bad()) {
        err << "error: cannot read " << path.string() << "\n";
        return std::nullopt;
    }
    return buf.str();
}

std::string tag_summary(const pgn::PgnGame& g) {
    return g.tag("White").value_or("?") + " - " + g.tag("Black").value_or("?");
}

std::string parse_error_text(const pgn::PgnError& e) {
    return "line " + std::to_string(e.line()) + ", column " + std::to_string(e.column()) + " near '" +
           e.lexeme() + "': " + e.reason();
}

struct ValidateOptions {
    std::vector<std::string> paths;
    bool verbose = false;
    bool strict = false;
};

int cmd_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& err, const Style& style) {
    int code = kOk;
    auto raise = [&](int c) { code = std::max(code, c); };
    std::size_t games = 0, ok = 0, failed = 0, warnings = 0;

    for (const auto& path_text : opt.paths) {
        const fs::path path(path_text);
        const auto text = read_file(path, err);
        if (!text) {
            raise(kIoError);
            continue;
        }
        std::vector<pgn::PgnGame> parsed;
        try {
            parsed = pgn::parse_pgn(*text);
        } catch (const pgn::PgnError& e) {
            out << path_text << ": " << style.bad("parse error") << " at " << parse_error_text(e) << "\n";
            err << path_text << ": parse error at " << parse_error_text(e) << "\n";
            raise(kInvalid);
            continue;
        }

        for (std::size_t i = 0; i < parsed.size(); ++i) {
            const auto& g = parsed[i];
            ++games;
            const std::string head = path_text + " #" + std::to_string(i + 1) + " [" + tag_summary(g) + "]";
            pgn::Replay r;
            try {
                r = pgn::replay(g);
            } catch (const pgn::ReplayError& e) {
                out << head << " " << style.bad("error") << " ply " << e.ply() << " '" << e.lexeme()
                    << "': " << e.reason() << "\n";
                err << head << ": ply " << e.ply() << " '" << e.lexeme() << "': " << e.reason() << "\n";
                ++failed;
                raise(kInvalid);
                continue;
            }

            if (opt.verbose) {
                for (std::size_t ply = 0; ply < r.moves.size(); ++ply) {
                    out << "ply " << ply + 1 << ": " << g.locations[ply].lexeme << "\n"
                        << render_board(r.positions[ply + 1].board.board_state());
                }
            }

            const auto engine = pgn::result_from_winner(r.winner);
            const bool mismatch = r.winner && engine != g.result;
            out << head << " " << style.ok("ok") << " plies " << r.moves.size() << " engine "
                << pgn::result_marker(engine) << " tag " << pgn::result_marker(g.result) << " final "
                << placement_fen(r.positions.back()) << "\n";
            if (mismatch) {
                const std::string msg = "engine result " + std::string(pgn::result_marker(engine)) +
                                        " (" + to_string(r.winner) + ") disagrees with result tag " +
                                        std::string(pgn::result_marker(g.result));
                if (opt.strict) {
                    out << head << " " << style.bad("error") << " " << msg << "\n";
                    err << head << ": " << msg << "\n";
                    ++failed;
                    raise(kInvalid);
                    continue;
                }
                out << head << " " << style.warn("warning") << " " << msg << "\n";
                ++warnings;
            }
            ++ok;
        }
    }
    out << games << " games, " << ok << " ok, " << failed << " failed, " << warnings << " warnings\n";
    return code;
}

struct PerftOptions {
    int depth = 0;
    std::string fen;
    bool divide = false;
};

int cmd_perft(const PerftOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.depth < 0) {
        err << "error: depth must be non-negative\n";
        return kInvalid;
    }
    Game game = new_game();
    if (!opt.fen.empty()) {
        try {
            game = parse_fen(opt.fen);
        } catch (const FenError& e) {
            err << "error: bad FEN: " << e.what() << "\n";
            return kInvalid;
        }
    }
    if (opt.divide && opt.depth > 0) {
        auto parts = perft_divide(game.board, game.turn, opt.depth);
        std::sort(parts.begin(), parts.end(),
                  [](const auto& a, const auto& b) { return to_uci(a.first) < to_uci(b.first); });
        std::uint64_t total = 0;
        for (const auto& [m, n] : parts) {
            out << to_uci(m) << ": " << n << "\n";
            total += n;
        }
        out << total << "\n";
        return kOk;
    }
    out << perft(game.board, game.turn, opt.depth) << "\n";
    return kOk;
}

bool same_tokens(const std::vector<pgn::PgnGame>& a, const std::vector<pgn::PgnGame>& b, std::string& why) {
    if (a.size() != b.size()) {
        why = std::to_string(a.size()) + " games in, " + std::to_string(b.size()) + " games out";
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& x = a[i].tokens;
        const auto& y = b[i].tokens;
        const std::size_t n = std::min(x.size(), y.size());
        for (std::size_t k = 0; k < n; ++k) {
            if (!(x[k] == y[k])) {
                why = "game " + std::to_string(i + 1) + " ply " + std::to_string(k + 1) + ": '" +
                      pgn::to_string(x[k]) + "' became '" + pgn::to_string(y[k]) + "'";
                return false;
            }
        }
        if (x.size() != y.size()) {
            why = "game " + std::to_string(i + 1) + ": " + std::to_string(x.size()) + " plies in, " +
                  std::to_string(y.size()) + " plies out";
            return false;
        }
        if (a[i].result != b[i].result) {
            why = "game " + std::to_string(i + 1) + ": result marker changed";
            return false;
        }
    }
    return true;
}

int cmd_roundtrip(const std::string& path_text, std::ostream& out, std::ostream& err) {
    const fs::path path(path_text);
    const auto text = read_file(path, err);
    if (!text)
        return kIoError;

    auto fail = [&](std::string_view stage, const std::string& detail) {
        err << path_text << ": " << stage << " stage failed: " << detail << "\n";
        return kInvalid;
    };

    std::vector<pgn::PgnGame> games;
    try {
        games = pgn::parse_pgn(*text);
    } catch (const pgn::PgnError& e) {
        return fail("parse", parse_error_text(e));
    }

    std::string serialized;
    for (std::size_t i = 0; i < games.size(); ++i) {
        pgn::Replay r;
        try {
            r = pgn::replay(games[i]);
        } catch (const pgn::ReplayError& e) {
            return fail("replay", "game " + std::to_string(i + 1) + ", " + e.what());
        }
        try {
            if (i > 0)
                serialized += '\n';
            serialized += pgn::serialize_game(games[i].tags, r.moves, games[i].result);
        } catch (const ContractViolation& e) {
            return fail("serialize", "game " + std::to_string(i + 1) + ", " + e.what());
        }
    }

    fs::path out_path = path;
    out_path.replace_extension(".out.pgn");
    {
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        file << serialized;
        file.flush();
        if (!file) {
            err << "error: cannot write " << out_path.string() << "\n";
            return kIoError;
        }
    }

    std::vector<pgn::PgnGame> again;
    try {
        again = pgn::parse_pgn(serialized);
    } catch (const pgn::PgnError& e) {
        return fail("re-parse", parse_error_text(e));
    }
    std::string why;
    if (!same_tokens(games, again, why))
        return fail("compare", why);

    out << path_text << ": " << games.size() << " games round-tripped to " << out_path.string() << "\n";
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chess rules engine: PGN validation, perft and PGN round-tripping", "purechess"};
    app.require_subcommand(1);

    ValidateOptions vopt;
    auto* validate = app.add_subcommand("validate", "Replay PGN files and report each game");
    validate->add_flag("--verbose", vopt.verbose, "Print the board after every ply");
    validate->add_flag("--strict", vopt.strict, "Treat result-tag mismatches as errors");
    validate->add_option("files", vopt.paths, "PGN files")->required();

    PerftOptions popt;
    auto* perft_cmd = app.add_subcommand("perft", "Count leaf nodes of the legal move tree");
    perft_cmd->add_option("--depth", popt.depth, "Search depth")->required();
    perft_cmd->add_option("--fen", popt.fen, "Start position (placement and side to move)");
    perft_cmd->add_flag("--divide", popt.divide, "Print subtotals per root move");

    std::string rt_path;
    auto* roundtrip = app.add_subcommand("roundtrip", "Parse, replay, serialise and re-parse a PGN file");
    roundtrip->add_option("file", rt_path, "PGN file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kInvalid;
    }

    const Style style(colour_wanted(out));
    try {
        if (validate->parsed())
            return cmd_validate(vopt, out, err, style);
        if (perft_cmd->parsed())
            return cmd_perft(popt, out, err);
        return cmd_roundtrip(rt_path, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
}

}  // namespace purechess::cli
