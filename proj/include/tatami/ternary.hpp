#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tatami/covering.hpp"

namespace tatami {

enum class Side : std::uint8_t { Left, Right, Top, Bottom };
enum class FlipDir : std::uint8_t { Up, Down, LeftWard, RightWard };

// One of the two diagonals a boundary monomino can be flipped on.
struct Diagonal {
    Side side;
    int index;  // monomino index, 1 <= index <= n-2
    FlipDir dir;

    bool operator==(const Diagonal&) const = default;
};

// Which boundary holds the monomino with a given code index.
Side monomino_side(int n, int index);

// Grid position of monomino `index` in the running bond.
std::pair<int, int> monomino_position(int n, int index);

// +1 flips up (even n) / right (odd n), -1 flips down / left.
Diagonal diagonal_for_flip(int n, int index, int sign);

// Sign convention of a diagonal's flip direction (+1 up/right, -1 down/left).
int flip_sign(const Diagonal& d);

// Number of dominoes in the diagonal: index for the "short kind"
// (ldown/rup/tleft/bleft), n-index-1 for the "long kind" (lup/rdown/tright/bright).
int diagonal_length(int n, const Diagonal& d);

std::string to_string(const Diagonal& d);

// Ternary flip states of the n-2 movable monominoes, indexed 1..n-2.
class TernaryCode {
  public:
    explicit TernaryCode(int n);
    TernaryCode(int n, std::vector<std::int8_t> symbols);

    int n() const { return n_; }
    int size() const { return static_cast<int>(symbols_.size()); }
    int symbol(int index) const { return symbols_[static_cast<std::size_t>(index - 1)]; }
    void set_symbol(int index, int value);

    // Comma-separated symbols in index order, e.g. "0,1,-1,0".
    std::string to_string() const;
    static TernaryCode parse(int n, std::string_view csv);

    bool operator==(const TernaryCode&) const = default;

  private:
    int n_;
    std::vector<std::int8_t> symbols_;
};

// Flags Type 1 conflicts (same boundary, flipped toward each other) and the
// Type 2 conflicts of opposite-boundary same-direction pairs whose combined
// length reaches n.
ValidationReport validate_code(const TernaryCode& code);

// Cells of the diagonal in the running bond, in walk order: the monomino cell,
// then for each domino its entry half and far half.
std::vector<std::pair<int, int>> diagonal_cells(int n, const Diagonal& d);

// Applies the flips of a valid code to the running bond.
// Throws std::invalid_argument carrying the report summary if the code is invalid.
Covering decode_code(const TernaryCode& code);

}  // namespace tatami
