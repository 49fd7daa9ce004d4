#include "tatami/covering.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace tatami {

Covering::Covering(int n) : n_(n) {
    if (n < 1) throw std::domain_error("grid side must be positive");
    cell_tile_.assign(static_cast<std::size_t>(n) * n, -1);
}

int Covering::add_tile(TileKind kind, int row, int col) {
    const int id = static_cast<int>(tiles_.size());
    const int r2 = kind == TileKind::VDomino ? row + 1 : row;
    const int c2 = kind == TileKind::HDomino ? col + 1 : col;
    if (row < 0 || col < 0 || r2 >= n_ || c2 >= n_) throw std::domain_error("tile out of bounds");
    auto& a = cell_tile_[static_cast<std::size_t>(row) * n_ + col];
    auto& b = cell_tile_[static_cast<std::size_t>(r2) * n_ + c2];
    if (a != -1 || (&a != &b && b != -1)) throw std::domain_error("tile overlap");
    a = id;
    b = id;
    tiles_.push_back({kind, row, col});
    return id;
}

void Covering::remove_tile_at(int r, int c) {
    const int id = tile_at(r, c);
    if (id < 0) return;
    const Tile t = tiles_[static_cast<std::size_t>(id)];
    cell_tile_[static_cast<std::size_t>(t.row) * n_ + t.col] = -1;
    const int r2 = t.kind == TileKind::VDomino ? t.row + 1 : t.row;
    const int c2 = t.kind == TileKind::HDomino ? t.col + 1 : t.col;
    cell_tile_[static_cast<std::size_t>(r2) * n_ + c2] = -1;
    // Tile slot stays allocated; cells no longer reference it.
}

bool Covering::operator==(const Covering& other) const {
    if (n_ != other.n_) return false;
    return canonical_key(*this) == canonical_key(other);
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::FourCorner: return "four-corner";
        case ViolationKind::BadTile: return "bad-tile";
        case ViolationKind::MonominoCount: return "monomino-count";
        case ViolationKind::CornerMonomino: return "corner-monomino";
        case ViolationKind::Type1Conflict: return "type1-conflict";
        case ViolationKind::Type2Conflict: return "type2-conflict";
    }
    return "?";
}

Covering running_bond(int n) {
    if (n < 2) throw std::domain_error("running_bond requires n >= 2");
    Covering c(n);
    if (n % 2 == 0) {
        for (int r = 0; r < n; ++r) {
            if (r % 2 == 0) {
                c.add_tile(TileKind::Monomino, r, 0);
                for (int col = 1; col + 1 < n; col += 2) c.add_tile(TileKind::HDomino, r, col);
                c.add_tile(TileKind::Monomino, r, n - 1);
            } else {
                for (int col = 0; col < n; col += 2) c.add_tile(TileKind::HDomino, r, col);
            }
        }
    } else {
        for (int col = 0; col < n; ++col) {
            if (col % 2 == 0) {
                c.add_tile(TileKind::Monomino, 0, col);
                for (int r = 1; r + 1 < n; r += 2) c.add_tile(TileKind::VDomino, r, col);
            } else {
                for (int r = 0; r + 1 < n - 1; r += 2) c.add_tile(TileKind::VDomino, r, col);
                c.add_tile(TileKind::Monomino, n - 1, col);
            }
        }
    }
    return c;
}

ValidationReport validate_covering(const Covering& c) {
    ValidationReport rep;
    const int n = c.n();
    std::ostringstream loc;
    for (int r = 0; r < n; ++r) {
        for (int col = 0; col < n; ++col) {
            if (c.tile_at(r, col) < 0) {
                rep.add(ViolationKind::BadTile, "uncovered cell (" + std::to_string(r) + "," + std::to_string(col) + ")");
            }
        }
    }
    if (!rep.ok) return rep;

    long monos = 0;
    std::set<int> seen;
    for (int r = 0; r < n; ++r) {
        for (int col = 0; col < n; ++col) {
            const int id = c.tile_at(r, col);
            if (!seen.insert(id).second) continue;
            const Tile& t = c.tile(id);
            if (t.row != r || t.col != col) {
                // Anchors are visited first in row-major order; a mismatch means
                // the cell map and tile list disagree.
                if (!(t.kind == TileKind::HDomino && t.row == r && t.col == col - 1) &&
                    !(t.kind == TileKind::VDomino && t.row == r - 1 && t.col == col)) {
                    rep.add(ViolationKind::BadTile, "anchor mismatch for tile " + std::to_string(id));
                }
            }
            if (t.kind == TileKind::Monomino) ++monos;
        }
    }
    if (monos != n) rep.add(ViolationKind::MonominoCount, std::to_string(monos) + " monominoes, expected " + std::to_string(n));
    for (int corner_col : {0, n - 1}) {
        const int id = c.tile_at(0, corner_col);
        if (c.tile(id).kind != TileKind::Monomino) {
            rep.add(ViolationKind::CornerMonomino, "(0," + std::to_string(corner_col) + ")");
        }
    }
    for (int r = 1; r < n; ++r) {
        for (int col = 1; col < n; ++col) {
            const int a = c.tile_at(r - 1, col - 1);
            const int b = c.tile_at(r - 1, col);
            const int d = c.tile_at(r, col - 1);
            const int e = c.tile_at(r, col);
            if (a != b && a != d && a != e && b != d && b != e && d != e) {
                rep.add(ViolationKind::FourCorner, "vertex (" + std::to_string(r) + "," + std::to_string(col) + ")");
            }
        }
    }
    return rep;
}

TileCensus tile_census(const Covering& c) {
    TileCensus cen;
    const int n = c.n();
    for (int r = 0; r < n; ++r) {
        for (int col = 0; col < n; ++col) {
            const Tile& t = c.tile(c.tile_at(r, col));
            if (t.row != r || t.col != col) continue;  // count each tile at its anchor
            switch (t.kind) {
                case TileKind::Monomino: ++cen.monominoes; break;
                case TileKind::HDomino: ++cen.horizontal; break;
                case TileKind::VDomino: ++cen.vertical; break;
            }
        }
    }
    return cen;
}

std::string canonical_key(const Covering& c) {
    const int n = c.n();
    std::string out;
    out.reserve(static_cast<std::size_t>(n) * (n + 1));
    for (int r = 0; r < n; ++r) {
        if (r) out.push_back('/');
        for (int col = 0; col < n; ++col) {
            const Tile& t = c.tile(c.tile_at(r, col));
            char ch = 'M';
            if (t.kind == TileKind::HDomino) ch = (col == t.col) ? 'L' : 'R';
            else if (t.kind == TileKind::VDomino) ch = (r == t.row) ? 'T' : 'B';
            out.push_back(ch);
        }
    }
    return out;
}

Covering parse_key(const std::string& key) {
    std::vector<std::string> rows;
    std::string cur;
    for (char ch : key) {
        if (ch == '/') {
            rows.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    rows.push_back(cur);
    const int n = static_cast<int>(rows.size());
    if (n < 2) throw std::invalid_argument("grid must be at least 2x2");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("key is not square");
    }
    Covering c(n);
    for (int r = 0; r < n; ++r) {
        for (int col = 0; col < n; ++col) {
            switch (rows[r][col]) {
                case 'M': c.add_tile(TileKind::Monomino, r, col); break;
                case 'L':
                    if (col + 1 >= n || rows[r][col + 1] != 'R') throw std::invalid_argument("dangling 'L'");
                    c.add_tile(TileKind::HDomino, r, col);
                    break;
                case 'T':
                    if (r + 1 >= n || rows[r + 1][col] != 'B') throw std::invalid_argument("dangling 'T'");
                    c.add_tile(TileKind::VDomino, r, col);
                    break;
                case 'R':
                    if (col == 0 || rows[r][col - 1] != 'L') throw std::invalid_argument("dangling 'R'");
                    break;
                case 'B':
                    if (r == 0 || rows[r - 1][col] != 'T') throw std::invalid_argument("dangling 'B'");
                    break;
                default: throw std::invalid_argument("bad cell character");
            }
        }
    }
    return c;
}

}  // namespace tatami
