#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tatami {

enum class TileKind : std::uint8_t { Monomino, HDomino, VDomino };

// Anchor is the top-left cell of the tile.
struct Tile {
    TileKind kind;
    int row;
    int col;
};

// A monomino/domino covering of the n x n grid. Cells index into `tiles`.
class Covering {
  public:
    Covering() = default;
    explicit Covering(int n);

    int n() const { return n_; }
    int tile_at(int r, int c) const { return cell_tile_[static_cast<std::size_t>(r) * n_ + c]; }
    const std::vector<Tile>& tiles() const { return tiles_; }
    const Tile& tile(int id) const { return tiles_[static_cast<std::size_t>(id)]; }

    // Adds a tile; cells must be free and in bounds.
    int add_tile(TileKind kind, int row, int col);
    // Clears the tile occupying (r, c).
    void remove_tile_at(int r, int c);

    bool operator==(const Covering& other) const;

  private:
    int n_ = 0;
    std::vector<int> cell_tile_;  // -1 = empty
    std::vector<Tile> tiles_;
};

enum class ViolationKind {
    FourCorner,
    BadTile,
    MonominoCount,
    CornerMonomino,
    Type1Conflict,
    Type2Conflict,
};

struct Violation {
    ViolationKind kind;
    std::string where;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(ViolationKind kind, std::string where) {
        ok = false;
        violations.push_back({kind, std::move(where)});
    }
};

const char* to_string(ViolationKind kind);

struct TileCensus {
    long vertical = 0;
    long horizontal = 0;
    long monominoes = 0;
};

// The unique bond pattern with monominoes in the top corners: all dominoes
// horizontal for even n (monominoes on the left/right boundaries), all
// vertical for odd n (monominoes along the top/bottom boundaries).
Covering running_bond(int n);

ValidationReport validate_covering(const Covering& c);

TileCensus tile_census(const Covering& c);

// Row-major cell classification, rows joined by '/':
//   'M' monomino, 'L'/'R' horizontal-domino halves, 'T'/'B' vertical-domino halves.
std::string canonical_key(const Covering& c);

// Inverse of canonical_key; throws std::invalid_argument on malformed input.
Covering parse_key(const std::string& key);

}  // namespace tatami
