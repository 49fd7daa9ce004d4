#include "tatami/ternary.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace tatami {

Side monomino_side(int n, int index) {
    if (index < 1 || index > n - 2) throw std::domain_error("monomino index out of range");
    if (n % 2 == 0) return index % 2 == 1 ? Side::Left : Side::Right;
    return index % 2 == 0 ? Side::Top : Side::Bottom;
}

std::pair<int, int> monomino_position(int n, int index) {
    switch (monomino_side(n, index)) {
        case Side::Left: return {n - 1 - index, 0};
        case Side::Right: return {index, n - 1};
        case Side::Top: return {0, index};
        case Side::Bottom: return {n - 1, index};
    }
    throw std::logic_error("unreachable");
}

Diagonal diagonal_for_flip(int n, int index, int sign) {
    if (sign != 1 && sign != -1) throw std::domain_error("flip sign must be +1 or -1");
    const Side side = monomino_side(n, index);
    FlipDir dir;
    if (side == Side::Left || side == Side::Right) {
        dir = sign > 0 ? FlipDir::Up : FlipDir::Down;
    } else {
        dir = sign > 0 ? FlipDir::RightWard : FlipDir::LeftWard;
    }
    return {side, index, dir};
}

int flip_sign(const Diagonal& d) {
    return (d.dir == FlipDir::Up || d.dir == FlipDir::RightWard) ? 1 : -1;
}

int diagonal_length(int n, const Diagonal& d) {
    if (monomino_side(n, d.index) != d.side) throw std::domain_error("diagonal side/index parity mismatch");
    const int i = d.index;
    switch (d.side) {
        case Side::Left: return d.dir == FlipDir::Down ? i : n - i - 1;       // ldown_i / lup_i
        case Side::Right: return d.dir == FlipDir::Up ? i : n - i - 1;        // rup_i / rdown_i
        case Side::Top: return d.dir == FlipDir::LeftWard ? i : n - i - 1;    // tleft_i / tright_i
        case Side::Bottom: return d.dir == FlipDir::LeftWard ? i : n - i - 1; // bleft_i / bright_i
    }
    throw std::logic_error("unreachable");
}

std::string to_string(const Diagonal& d) {
    static const char* side_names[] = {"l", "r", "t", "b"};
    static const char* dir_names[] = {"up", "down", "left", "right"};
    std::ostringstream out;
    out << side_names[static_cast<int>(d.side)] << dir_names[static_cast<int>(d.dir)] << "_" << d.index;
    return out.str();
}

TernaryCode::TernaryCode(int n) : n_(n) {
    if (n < 2) throw std::domain_error("code requires n >= 2");
    symbols_.assign(static_cast<std::size_t>(n > 2 ? n - 2 : 0), 0);
}

TernaryCode::TernaryCode(int n, std::vector<std::int8_t> symbols) : n_(n), symbols_(std::move(symbols)) {
    if (n < 2) throw std::domain_error("code requires n >= 2");
}

void TernaryCode::set_symbol(int index, int value) {
    if (index < 1 || index > size()) throw std::domain_error("symbol index out of range");
    if (value < -1 || value > 1) throw std::domain_error("symbol outside {-1,0,+1}");
    symbols_[static_cast<std::size_t>(index - 1)] = static_cast<std::int8_t>(value);
}

std::string TernaryCode::to_string() const {
    std::ostringstream out;
    for (int i = 1; i <= size(); ++i) {
        if (i > 1) out << ',';
        out << symbol(i);
    }
    return out.str();
}

TernaryCode TernaryCode::parse(int n, std::string_view csv) {
    std::vector<std::string> tokens;
    if (!csv.empty()) {
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = csv.find(',', pos);
            tokens.emplace_back(csv.substr(pos, comma == std::string_view::npos ? csv.size() - pos : comma - pos));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    TernaryCode code(n);
    if (static_cast<int>(tokens.size()) != code.size())
        throw std::invalid_argument("code must have exactly n-2 symbols");
    for (int i = 1; i <= code.size(); ++i) {
        int value;
        try {
            value = std::stoi(tokens[static_cast<std::size_t>(i - 1)]);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad code symbol '" + tokens[static_cast<std::size_t>(i - 1)] + "'");
        }
        code.set_symbol(i, value);
    }
    return code;
}

ValidationReport validate_code(const TernaryCode& code) {
    ValidationReport rep;
    const int n = code.n();
    if (code.size() != (n > 2 ? n - 2 : 0)) {
        rep.add(ViolationKind::BadTile, "code length " + std::to_string(code.size()));
        return rep;
    }
    std::vector<Diagonal> flipped;
    for (int i = 1; i <= n - 2; ++i) {
        const int s = code.symbol(i);
        if (s != 0) flipped.push_back(diagonal_for_flip(n, i, s));
    }
    for (std::size_t x = 0; x < flipped.size(); ++x) {
        for (std::size_t y = x + 1; y < flipped.size(); ++y) {
            const Diagonal& a = flipped[x];  // a.index < b.index
            const Diagonal& b = flipped[y];
            const bool same_side = a.side == b.side;
            const int sa = flip_sign(a);
            const int sb = flip_sign(b);
            if (same_side) {
                // Toward each other: the lower-indexed monomino flipped in the
                // increasing direction, the higher-indexed in the decreasing one.
                const bool toward = (a.side == Side::Left) ? (sa > 0 && sb < 0)
                                  : (a.side == Side::Right) ? (sa < 0 && sb > 0)
                                                            : (sa > 0 && sb < 0);
                if (toward) {
                    rep.add(ViolationKind::Type1Conflict, to_string(a) + " vs " + to_string(b));
                }
            } else if (sa == sb) {
                // Opposite boundaries, same direction: conflict iff the
                // combined diagonal length reaches n.
                if (diagonal_length(n, a) + diagonal_length(n, b) >= n) {
                    rep.add(ViolationKind::Type2Conflict, to_string(a) + " vs " + to_string(b));
                }
            }
        }
    }
    return rep;
}

std::vector<std::pair<int, int>> diagonal_cells(int n, const Diagonal& d) {
    const Covering bond = running_bond(n);
    auto [r, c] = monomino_position(n, d.index);
    const int len = diagonal_length(n, d);
    int dr = 0, dc = 0;
    switch (d.dir) {
        case FlipDir::Up: dr = -1; break;
        case FlipDir::Down: dr = 1; break;
        case FlipDir::LeftWard: dc = -1; break;
        case FlipDir::RightWard: dc = 1; break;
    }
    std::vector<std::pair<int, int>> path;
    path.reserve(static_cast<std::size_t>(2 * len + 1));
    path.emplace_back(r, c);
    for (int step = 0; step < len; ++step) {
        r += dr;
        c += dc;
        const Tile& t = bond.tile(bond.tile_at(r, c));
        const int or_ = (t.kind == TileKind::VDomino && t.row == r) ? r + 1
                      : (t.kind == TileKind::VDomino)               ? r - 1
                                                                    : r;
        const int oc = (t.kind == TileKind::HDomino && t.col == c) ? c + 1
                     : (t.kind == TileKind::HDomino)               ? c - 1
                                                                   : c;
        path.emplace_back(r, c);
        path.emplace_back(or_, oc);
        r = or_;
        c = oc;
    }
    return path;
}

Covering decode_code(const TernaryCode& code) {
    const ValidationReport rep = validate_code(code);
    if (!rep.ok) {
        std::string msg = "invalid code:";
        for (const auto& v : rep.violations) msg += " [" + std::string(to_string(v.kind)) + " " + v.where + "]";
        throw std::invalid_argument(msg);
    }
    const int n = code.n();
    Covering c = running_bond(n);
    const TileKind flipped_kind = n % 2 == 0 ? TileKind::VDomino : TileKind::HDomino;
    for (int i = 1; i <= n - 2; ++i) {
        const int s = code.symbol(i);
        if (s == 0) continue;
        const auto path = diagonal_cells(n, diagonal_for_flip(n, i, s));
        for (std::size_t t = 0; t + 1 < path.size(); t += 2) c.remove_tile_at(path[t].first, path[t].second);
        c.remove_tile_at(path.back().first, path.back().second);
        // Re-tile the vacated staircase with the orientation swapped and the
        // monomino at the other extreme.
        for (std::size_t t = 0; t + 1 < path.size(); t += 2) {
            const auto [r1, c1] = path[t];
            const auto [r2, c2] = path[t + 1];
            assert((flipped_kind == TileKind::VDomino && c1 == c2 && std::abs(r1 - r2) == 1) ||
                   (flipped_kind == TileKind::HDomino && r1 == r2 && std::abs(c1 - c2) == 1));
            c.add_tile(flipped_kind, std::min(r1, r2), std::min(c1, c2));
        }
        c.add_tile(TileKind::Monomino, path.back().first, path.back().second);
    }
    return c;
}

}  // namespace tatami
