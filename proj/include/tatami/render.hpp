#pragma once

#include <string>
#include <vector>

#include "tatami/covering.hpp"

namespace tatami {

struct RenderSpec {
    int cell_size = 24;             // pixels per grid cell (svg)
    bool highlight_flipped = true;  // colour monominoes that moved off the bond red
    int sheet_columns = 6;          // thumbnails per row in a sheet
};

// One line per grid row using the canonical cell alphabet.
std::string render_ascii(const Covering& c);

// Inverse of render_ascii; throws std::invalid_argument on malformed input.
Covering parse_ascii(const std::string& text);

// Standalone SVG document for one covering.
std::string render_svg(const Covering& c, const RenderSpec& spec = {});

// One SVG sheet with thumbnails laid out row-major in the given order.
std::string render_svg_sheet(const std::vector<Covering>& coverings, const RenderSpec& spec = {});

}  // namespace tatami
