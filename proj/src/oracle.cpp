#include "tatami/oracle.hpp"

#include <stdexcept>
#include <string>

namespace tatami {
namespace {

class Backtracker {
  public:
    Backtracker(int n, const std::function<void(const Covering&)>& visit)
        : n_(n), visit_(visit), grid_(static_cast<std::size_t>(n) * n, -1) {}

    void run() { rec(0, 0, 0); }

  private:
    int at(int r, int c) const { return grid_[static_cast<std::size_t>(r) * n_ + c]; }
    void set(int r, int c, int id) { grid_[static_cast<std::size_t>(r) * n_ + c] = id; }

    // Vertex (r,c) lies between cells; fine while any neighbour is still empty.
    bool vertex_ok(int r, int c) const {
        const int a = at(r - 1, c - 1), b = at(r - 1, c), d = at(r, c - 1), e = at(r, c);
        if (a < 0 || b < 0 || d < 0 || e < 0) return true;
        return a == b || a == d || a == e || b == d || b == e || d == e;
    }

    bool vertices_ok(int r0, int r1, int c0, int c1) const {
        for (int r = std::max(r0, 1); r <= std::min(r1, n_ - 1); ++r)
            for (int c = std::max(c0, 1); c <= std::min(c1, n_ - 1); ++c)
                if (!vertex_ok(r, c)) return false;
        return true;
    }

    void emit() {
        Covering c(n_);
        std::vector<bool> seen(kinds_.size(), false);
        for (int r = 0; r < n_; ++r) {
            for (int col = 0; col < n_; ++col) {
                const int id = at(r, col);
                if (seen[static_cast<std::size_t>(id)]) continue;
                seen[static_cast<std::size_t>(id)] = true;
                c.add_tile(kinds_[static_cast<std::size_t>(id)], r, col);
            }
        }
        visit_(c);
    }

    void rec(int pos, int monos, int next_id) {
        if (pos == n_ * n_) {
            if (monos == n_) emit();
            return;
        }
        const int r = pos / n_, c = pos % n_;
        if (at(r, c) != -1) {
            rec(pos + 1, monos, next_id);
            return;
        }
        if (monos < n_) {
            set(r, c, next_id);
            kinds_.push_back(TileKind::Monomino);
            if (vertices_ok(r, r + 1, c, c + 1)) rec(pos + 1, monos + 1, next_id + 1);
            kinds_.pop_back();
            set(r, c, -1);
        }
        if ((r == 0 && c == 0) || (r == 0 && c == n_ - 1)) return;  // corners forced to monominoes
        if (c + 1 < n_ && at(r, c + 1) == -1 && !(r == 0 && c + 1 == n_ - 1)) {
            set(r, c, next_id);
            set(r, c + 1, next_id);
            kinds_.push_back(TileKind::HDomino);
            if (vertices_ok(r, r + 1, c, c + 2)) rec(pos + 1, monos, next_id + 1);
            kinds_.pop_back();
            set(r, c, -1);
            set(r, c + 1, -1);
        }
        if (r + 1 < n_) {
            set(r, c, next_id);
            set(r + 1, c, next_id);
            kinds_.push_back(TileKind::VDomino);
            if (vertices_ok(r, r + 2, c, c + 1)) rec(pos + 1, monos, next_id + 1);
            kinds_.pop_back();
            set(r, c, -1);
            set(r + 1, c, -1);
        }
    }

    int n_;
    const std::function<void(const Covering&)>& visit_;
    std::vector<int> grid_;
    std::vector<TileKind> kinds_;
};

}  // namespace

void enumerate_tn(int n, const std::function<void(const Covering&)>& visit) {
    if (n < 2 || n > 12) throw std::domain_error("enumerate_tn practical bound is 2 <= n <= 12");
    Backtracker(n, visit).run();
}

CensusHistogram vertical_histogram(int n) {
    CensusHistogram h;
    h.n = n;
    enumerate_tn(n, [&](const Covering& c) {
        const TileCensus cen = tile_census(c);
        const long long k = n % 2 == 0 ? cen.vertical : cen.horizontal;
        ++h.by_vertical[static_cast<int>(k)];
        ++h.total;
    });
    return h;
}

std::vector<TernaryCode> enumerate_valid_codes(int n) {
    if (n < 2 || n > 14) throw std::domain_error("enumerate_valid_codes practical bound is 2 <= n <= 14");
    const int len = n > 2 ? n - 2 : 0;
    std::vector<TernaryCode> out;
    std::vector<std::int8_t> symbols(static_cast<std::size_t>(len), -1);
    while (true) {
        TernaryCode code(n, symbols);
        if (validate_code(code).ok) out.push_back(code);
        int i = 0;
        while (i < len && symbols[static_cast<std::size_t>(i)] == 1) {
            symbols[static_cast<std::size_t>(i)] = -1;
            ++i;
        }
        if (i == len) break;
        ++symbols[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace tatami
