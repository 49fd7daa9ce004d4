#pragma once

#include <functional>
#include <map>
#include <optional>

#include "tatami/covering.hpp"
#include "tatami/gensets.hpp"
#include "tatami/ternary.hpp"

namespace tatami {

// The independent flips available inside one partition class of T_n.
struct FlipMenu {
    std::optional<Diagonal> class_diag;  // nullopt for the empty class
    int fixed_contribution = 0;          // d_n(a), 0 for the empty class
    std::map<int, Diagonal> group_a;     // length m -> diagonal, lengths exactly {1..A}
    std::map<int, Diagonal> group_b;     // lengths exactly {1..B}
};

// Menu for class T_n(a); the class diagonal must be the one with
// d_n(a) >= d_n(other diagonal of the same monomino).
FlipMenu flip_menu(int n, const Diagonal& class_diag);

// Menu for T_n(empty): two groups with lengths {1..floor((n-2)/2)} each.
FlipMenu flip_menu_empty(int n);

struct CatStats {
    GenStats gen;              // subset-generator data-structure work
    long long decode_ops = 0;  // cells touched while assembling coverings
    long long outputs = 0;
};

// Visits every covering of T_n with exactly k vertical dominoes (even n) or
// k horizontal dominoes (odd n), each once, in a deterministic class order.
// Returns the number of coverings; fills *stats when given.
long long gen_vh(int n, long k, const std::function<void(const Covering&)>& visit, CatStats* stats = nullptr);

// Same enumeration delivering the ternary codes instead of decoded grids.
long long gen_vh_codes(int n, long k, const std::function<void(const TernaryCode&)>& visit, CatStats* stats = nullptr);

}  // namespace tatami
