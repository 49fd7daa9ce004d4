#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace tatami {

// Subsets of {1..a} summing to i, and of {1..b} summing to j.
struct SubsetPair {
    std::vector<int> first;
    std::vector<int> second;
};

// Number of subsets of {1..s} with element sum k (0 outside [0, s(s+1)/2]).
mpz_class subset_sum_count(int s, long k);

// Instrumentation counters for the CAT property.
struct GenStats {
    long long list_writes = 0;  // elementary linked-list mutations
    long long calls = 0;        // recursive invocations
    long long outputs = 0;

    long long ops() const { return list_writes + calls; }
};

// Generates Sset(a,i) x Sset(b,j) in constant amortized time.  The two
// working lists are allocated once for the largest planned (a, b); each run
// re-points slot 0 only, so per-call setup is O(1).
class SubsetPairGen {
  public:
    SubsetPairGen(int max_a, int max_b);

    // Visits each pair exactly once; returns the number of pairs.
    // Sets are delivered as sorted vectors copied out of the working lists.
    long long run(int a, long i, int b, long j, const std::function<void(const SubsetPair&)>& visit);

    const GenStats& stats() const { return stats_; }
    void reset_stats() { stats_ = {}; }

  private:
    void mod_c(int a, long i, int b, long j, bool comp, bool is_first);
    std::vector<int> read(const std::vector<int>& list, int top) const;

    std::vector<int> ai_, bj_;  // linked lists: slot 0 is the head pointer
    int atop_ = 0, btop_ = 0;
    const std::function<void(const SubsetPair&)>* visit_ = nullptr;
    long long count_ = 0;
    GenStats stats_;
};

// One-shot convenience wrapper.
long long gen_subset_pairs(int a, long i, int b, long j, const std::function<void(const SubsetPair&)>& visit);

}  // namespace tatami
