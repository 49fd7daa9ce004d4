#include "tatami/catgen.hpp"

#include <stdexcept>

namespace tatami {
namespace {

// Sign of the class diagonal: long kind is lup/rdown (even n) or
// tright/bright (odd n); short kind the respective opposites.
int class_sign(int n, int q, bool long_kind) {
    if (n % 2 == 0) {
        const bool left = q % 2 == 1;
        return long_kind == left ? 1 : -1;
    }
    return long_kind ? 1 : -1;
}

bool is_long_kind(int n, const Diagonal& d) {
    if (n % 2 == 0) {
        const bool left = d.index % 2 == 1;
        return left ? d.dir == FlipDir::Up : d.dir == FlipDir::Down;
    }
    return d.dir == FlipDir::RightWard;
}

}  // namespace

FlipMenu flip_menu(int n, const Diagonal& class_diag) {
    const int q = class_diag.index;
    const int d = diagonal_length(n, class_diag);  // validates side/index
    const int d_other = q + (n - q - 1) - d;
    if (d < d_other) throw std::domain_error("class diagonal must satisfy d(a) >= d(a-bar)");
    FlipMenu menu;
    menu.class_diag = class_diag;
    menu.fixed_contribution = d;
    auto diag = [&](int index, int sign) { return diagonal_for_flip(n, index, sign); };
    if (n % 2 == 0) {
        for (int m = 1; m <= q - 1; ++m)
            menu.group_a.emplace(m, diag(m, m % 2 == 1 ? -1 : 1));  // ldown_m / rup_m
        for (int m = 1; m <= n - q - 2; ++m)
            menu.group_b.emplace(m, diag(n - m - 1, m % 2 == 1 ? -1 : 1));  // rdown_{n-m-1} / lup_{n-m-1}
    } else if (q % 2 == 0) {  // top monomino
        for (int m = 1; m <= q - 1; ++m)
            menu.group_a.emplace(m, m % 2 == 0 ? diag(m, -1) : diag(n - m - 1, 1));  // tleft_m / bright_{n-m-1}
        for (int m = 1; m <= n - q - 2; ++m)
            menu.group_b.emplace(m, m % 2 == 1 ? diag(m, -1) : diag(n - m - 1, 1));  // bleft_m / tright_{n-m-1}
    } else {  // bottom monomino
        for (int m = 1; m <= q - 1; ++m)
            menu.group_a.emplace(m, m % 2 == 1 ? diag(m, -1) : diag(n - m - 1, 1));  // bleft_m / tright_{n-m-1}
        for (int m = 1; m <= n - q - 2; ++m)
            menu.group_b.emplace(m, m % 2 == 0 ? diag(m, -1) : diag(n - m - 1, 1));  // tleft_m / bright_{n-m-1}
    }
    return menu;
}

FlipMenu flip_menu_empty(int n) {
    FlipMenu menu;
    const int cap = (n - 2) / 2;
    auto diag = [&](int index, int sign) { return diagonal_for_flip(n, index, sign); };
    if (n % 2 == 0) {
        for (int m = 1; m <= cap; ++m) {
            menu.group_a.emplace(m, m % 2 == 1 ? diag(m, -1) : diag(n - m - 1, 1));  // ldown_m / lup_{n-m-1}
            menu.group_b.emplace(m, m % 2 == 0 ? diag(m, 1) : diag(n - m - 1, -1));  // rup_m / rdown_{n-m-1}
        }
    } else {
        for (int m = 1; m <= cap; ++m) {
            menu.group_a.emplace(m, diag(m, -1));          // tleft_m / bleft_m
            menu.group_b.emplace(m, diag(n - m - 1, 1));   // tright / bright at n-m-1
        }
    }
    return menu;
}

long long gen_vh_codes(int n, long k, const std::function<void(const TernaryCode&)>& visit, CatStats* stats) {
    if (n < 2) throw std::domain_error("gen_vh requires n >= 2");
    if (k < 0) return 0;
    CatStats local;
    CatStats& st = stats ? *stats : local;
    if (n == 2) {
        if (k == 0) {
            ++st.outputs;
            visit(TernaryCode(2));
            return 1;
        }
        return 0;
    }
    const int list_cap = std::max(n - 3, (n - 2) / 2);
    SubsetPairGen gen(list_cap, list_cap);

    const auto assemble = [&](const FlipMenu& menu, const std::map<int, Diagonal>* g1,
                              const std::map<int, Diagonal>* g2, const SubsetPair& pair) {
        TernaryCode code(n);
        if (menu.class_diag) code.set_symbol(menu.class_diag->index, flip_sign(*menu.class_diag));
        for (int m : pair.first) {
            const Diagonal& d = g1->at(m);
            code.set_symbol(d.index, flip_sign(d));
        }
        for (int m : pair.second) {
            const Diagonal& d = g2->at(m);
            code.set_symbol(d.index, flip_sign(d));
        }
        ++st.outputs;
        visit(code);
    };

    long long total = 0;
    for (int i = 1; i <= (n - 1) / 2; ++i) {
        const long rem = k - (n - i - 1);
        if (rem < 0) continue;
        for (const bool long_kind : {true, false}) {
            const int q = long_kind ? i : n - i - 1;
            const FlipMenu menu = flip_menu(n, diagonal_for_flip(n, q, class_sign(n, q, long_kind)));
            // The group holding lengths {1..n-i-2} pairs with the generator's
            // first set; for the middle class (odd n, q == i) that is group_b.
            const auto& g_long = q == i ? menu.group_b : menu.group_a;
            const auto& g_short = q == i ? menu.group_a : menu.group_b;
            for (long k1 = 0; k1 <= rem; ++k1) {
                const long k2 = rem - k1;
                if (subset_sum_count(n - i - 2, k1) == 0 || subset_sum_count(i - 1, k2) == 0) continue;
                total += gen.run(n - i - 2, k1, i - 1, k2,
                                 [&](const SubsetPair& pair) { assemble(menu, &g_long, &g_short, pair); });
            }
        }
    }
    const FlipMenu empty = flip_menu_empty(n);
    const int cap = (n - 2) / 2;
    for (long k1 = 0; k1 <= k; ++k1) {
        const long k2 = k - k1;
        if (subset_sum_count(cap, k1) == 0 || subset_sum_count(cap, k2) == 0) continue;
        total += gen.run(cap, k1, cap, k2,
                         [&](const SubsetPair& pair) { assemble(empty, &empty.group_a, &empty.group_b, pair); });
    }
    st.gen = gen.stats();
    return total;
}

long long gen_vh(int n, long k, const std::function<void(const Covering&)>& visit, CatStats* stats) {
    CatStats local;
    CatStats& st = stats ? *stats : local;
    const long long count = gen_vh_codes(
        n, k,
        [&](const TernaryCode& code) {
            st.decode_ops += static_cast<long long>(n) * n;
            visit(decode_code(code));
        },
        stats ? stats : nullptr);
    return count;
}

}  // namespace tatami
