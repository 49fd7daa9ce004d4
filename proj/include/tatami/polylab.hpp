#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tatami/intpoly.hpp"

namespace tatami {

// S_n(z) = prod_{i=1..n} (1 + z^i), subset-sum generating polynomial.
IntPoly s_poly(int n);

// VH_n(z): generating polynomial of T_n by vertical (even n) / horizontal
// (odd n) domino count.
IntPoly vh_poly(int n);

// Coefficient k of VH_n via the double-sum subset-count formula, without
// polynomial arithmetic.
mpz_class vh_coeff(int n, long k);

// VH_n(1) = n * 2^(n-3) by closed form (1 at n = 2).
mpz_class vh_at_one(int n);

// Cyclotomic polynomial Phi_m, memoized, by recursive exact division.
IntPoly cyclotomic(int m);

// D_n(z) computed in both published forms (S-product and cyclotomic-power
// product); throws std::logic_error if they disagree.
IntPoly d_poly(int n);

// P_n(z) = VH_n / D_n; throws ExactDivideError on a nonzero remainder.
IntPoly p_poly(int n);

// deg P_n from both closed forms (sum of largest odd divisors, and the
// binomial expression); throws std::logic_error if they disagree.
long predicted_deg_p(int n);

// P_n(1) = n * 2^(popcount(n-2) - 1), evaluated exactly in rationals and
// asserted integral (covers the n = 2 half-power).
mpz_class p_at_one_predicted(int n);

// sum_{k>=1} floor(x/2^k + 1/2) in exact rationals; equals floor(x).
mpz_class floor_halving_sum(const mpq_class& x);

// R_n(x,1) = 2 VH_n(x) + 2 x^((n^2-n)/2) VH_n(1/x); self-reciprocal.
IntPoly r_poly(int n);

// Coefficient (n^2-n)/4 of VH_n, or nullopt when that is not an integer.
std::optional<mpz_class> balanced_count(int n);

// First N+1 coefficients of (1+z)(1-2z) / ((1-2z^2) sqrt(1-4z^2)).
std::vector<mpz_class> pn_neg1_series(int N);

// ---- real-root machinery (exact Sturm sequences) ----

// Number of distinct real roots of p in the half-open interval (a, b].
int real_roots_in(const IntPoly& p, const mpq_class& a, const mpq_class& b);

// Total number of distinct real roots of p.
int real_roots_total(const IntPoly& p);

// Rational bracket [lo, hi] around a root, shrunk by bisection.
struct RootBracket {
    mpq_class lo, hi;
};

// Bracket of the unique root of p in (a, b); requires opposite signs at the ends.
RootBracket bisect_root(const IntPoly& p, mpq_class a, mpq_class b, int steps);

// ---- conjecture checking ----

struct ConjectureReport {
    std::string id;      // vhcon-a, vhcon-b, pcon-a, pcon-b, pcon-c, pcon-e, pcon-f
    std::string range;   // human-readable n range checked
    bool holds = false;
    std::string detail;  // failure witness or extra findings
};

std::vector<ConjectureReport> check_conjectures(int nmax);

}  // namespace tatami
