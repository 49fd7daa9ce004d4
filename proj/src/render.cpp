#include "tatami/render.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tatami {

std::string render_ascii(const Covering& c) {
    std::string key = canonical_key(c);
    for (char& ch : key)
        if (ch == '/') ch = '\n';
    key.push_back('\n');
    return key;
}

Covering parse_ascii(const std::string& text) {
    std::string key;
    key.reserve(text.size());
    for (char ch : text) {
        if (ch == '\n') {
            if (!key.empty() && key.back() != '/') key.push_back('/');
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            key.push_back(ch);
        }
    }
    while (!key.empty() && key.back() == '/') key.pop_back();
    return parse_key(key);
}

namespace {

std::set<std::pair<int, int>> bond_monomino_cells(int n) {
    std::set<std::pair<int, int>> cells;
    const Covering bond = running_bond(n);
    for (const Tile& t : bond.tiles())
        if (t.kind == TileKind::Monomino) cells.emplace(t.row, t.col);
    return cells;
}

void emit_tiles(std::ostream& out, const Covering& c, const RenderSpec& spec, int x0, int y0) {
    const int s = spec.cell_size;
    const auto bond_monos = spec.highlight_flipped ? bond_monomino_cells(c.n()) : std::set<std::pair<int, int>>{};
    std::set<int> seen;
    for (int r = 0; r < c.n(); ++r) {
        for (int col = 0; col < c.n(); ++col) {
            const int id = c.tile_at(r, col);
            if (!seen.insert(id).second) continue;
            const Tile& t = c.tile(id);
            const int w = t.kind == TileKind::HDomino ? 2 * s : s;
            const int h = t.kind == TileKind::VDomino ? 2 * s : s;
            std::string fill = "#f4ead6";
            if (t.kind == TileKind::Monomino) {
                const bool flipped = spec.highlight_flipped && !bond_monos.count({t.row, t.col});
                fill = flipped ? "#d0342c" : "#7a7a7a";
            }
            out << "  <rect x=\"" << x0 + t.col * s << "\" y=\"" << y0 + t.row * s << "\" width=\"" << w
                << "\" height=\"" << h << "\" fill=\"" << fill << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
        }
    }
}

}  // namespace

std::string render_svg(const Covering& c, const RenderSpec& spec) {
    if (spec.cell_size <= 0) throw std::domain_error("cell size must be positive");
    const int side = c.n() * spec.cell_size;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side + 2 << "\" height=\"" << side + 2
        << "\" viewBox=\"-1 -1 " << side + 2 << " " << side + 2 << "\">\n";
    emit_tiles(out, c, spec, 0, 0);
    out << "</svg>\n";
    return out.str();
}

std::string render_svg_sheet(const std::vector<Covering>& coverings, const RenderSpec& spec) {
    if (spec.cell_size <= 0 || spec.sheet_columns <= 0) throw std::domain_error("bad render spec");
    int max_n = 0;
    for (const Covering& c : coverings) max_n = std::max(max_n, c.n());
    const int cell = spec.cell_size;
    const int pad = cell;
    const int slot = max_n * cell + pad;
    const int cols = std::min(spec.sheet_columns, std::max(static_cast<int>(coverings.size()), 1));
    const int rows = coverings.empty() ? 0 : (static_cast<int>(coverings.size()) + cols - 1) / cols;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * slot + pad << "\" height=\""
        << rows * slot + pad << "\">\n";
    for (std::size_t t = 0; t < coverings.size(); ++t) {
        const int gx = static_cast<int>(t) % cols, gy = static_cast<int>(t) / cols;
        emit_tiles(out, coverings[t], spec, pad + gx * slot, pad + gy * slot);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace tatami
