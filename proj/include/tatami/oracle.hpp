#pragma once

#include <functional>
#include <map>
#include <vector>

#include "tatami/covering.hpp"
#include "tatami/ternary.hpp"

namespace tatami {

// Histogram of T_n by vertical-domino count (even n) or horizontal (odd n).
struct CensusHistogram {
    int n = 0;
    std::map<int, long long> by_vertical;
    long long total = 0;
};

// Brute-force backtracking enumeration of T_n, independent of the decode path.
// Practical bound 2 <= n <= 12; throws std::domain_error outside it.
void enumerate_tn(int n, const std::function<void(const Covering&)>& visit);

CensusHistogram vertical_histogram(int n);

// All valid ternary codes by exhaustive filter over 3^(n-2) strings (n <= 14).
std::vector<TernaryCode> enumerate_valid_codes(int n);

}  // namespace tatami
