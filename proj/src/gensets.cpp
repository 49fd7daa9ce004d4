#include "tatami/gensets.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace tatami {

mpz_class subset_sum_count(int s, long k) {
    if (s < 0) throw std::domain_error("subset_sum_count requires s >= 0");
    const long maxsum = static_cast<long>(s) * (s + 1) / 2;
    if (k < 0 || k > maxsum) return 0;
    static std::map<int, std::vector<mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(s);
    if (it == cache.end()) {
        std::vector<mpz_class> dp(static_cast<std::size_t>(maxsum) + 1);
        dp[0] = 1;
        for (int e = 1; e <= s; ++e) {
            const long top = static_cast<long>(e) * (e + 1) / 2;
            for (long t = top; t >= e; --t) dp[static_cast<std::size_t>(t)] += dp[static_cast<std::size_t>(t - e)];
        }
        it = cache.emplace(s, std::move(dp)).first;
    }
    return it->second[static_cast<std::size_t>(k)];
}

SubsetPairGen::SubsetPairGen(int max_a, int max_b) {
    if (max_a < 0 || max_b < 0) throw std::domain_error("list sizes must be nonnegative");
    ai_.resize(static_cast<std::size_t>(max_a) + 1);
    bj_.resize(static_cast<std::size_t>(max_b) + 1);
    // Persistent default links: every slot t points at t+1.
    for (int t = 0; t <= max_a; ++t) ai_[static_cast<std::size_t>(t)] = t + 1;
    for (int t = 0; t <= max_b; ++t) bj_[static_cast<std::size_t>(t)] = t + 1;
}

std::vector<int> SubsetPairGen::read(const std::vector<int>& list, int top) const {
    std::vector<int> s;
    for (int x = list[0]; x <= top; x = list[static_cast<std::size_t>(x)]) s.push_back(x);
    return s;
}

long long SubsetPairGen::run(int a, long i, int b, long j, const std::function<void(const SubsetPair&)>& visit) {
    if (a < 0 || b < 0 || i < 0 || j < 0) throw std::domain_error("gen_subset_pairs parameters must be nonnegative");
    if (a >= static_cast<int>(ai_.size()) || b >= static_cast<int>(bj_.size()))
        throw std::domain_error("generator lists too small for requested a/b");
    count_ = 0;
    if (i > static_cast<long>(a) * (a + 1) / 2 || j > static_cast<long>(b) * (b + 1) / 2) return 0;
    atop_ = a;
    btop_ = b;
    visit_ = &visit;
    // O(1) per-call setup: only the two head pointers change.
    ai_[0] = a + 1;
    bj_[0] = b + 1;
    stats_.list_writes += 2;
    mod_c(a, i, b, j, false, true);
    visit_ = nullptr;
    return count_;
}

void SubsetPairGen::mod_c(int a, long i, int b, long j, bool comp, bool is_first) {
    ++stats_.calls;
    if (a == 0) {
        if (is_first) {
            mod_c(b, j, 0, 0, false, false);
        } else {
            ++stats_.outputs;
            ++count_;
            SubsetPair pair{read(ai_, atop_), read(bj_, btop_)};
            (*visit_)(pair);
        }
        return;
    }
    std::vector<int>& L = is_first ? ai_ : bj_;
    const auto au = [&](int t) -> int& { return L[static_cast<std::size_t>(t)]; };
    if (4 * i > static_cast<long>(a) * (a + 1)) {  // i past half the max sum: generate the complements
        i = static_cast<long>(a) * (a + 1) / 2 - i;
        comp = !comp;
    }
    if (i < a) {
        if (comp) {
            au(a) = au(0);
            au(0) = static_cast<int>(i) + 1;
            stats_.list_writes += 2;
            mod_c(static_cast<int>(i), i, b, j, comp, is_first);
            au(0) = au(a);
            au(a) = a + 1;
            stats_.list_writes += 2;
        } else {
            mod_c(static_cast<int>(i), i, b, j, comp, is_first);
        }
    } else {
        au(a) = au(0);
        au(0) = a;
        stats_.list_writes += 2;
        if (comp) {
            mod_c(a - 1, i, b, j, comp, is_first);
            au(0) = au(a);
            au(a) = a + 1;
            stats_.list_writes += 2;
            mod_c(a - 1, i - a, b, j, comp, is_first);
        } else {
            mod_c(a - 1, i - a, b, j, comp, is_first);
            au(0) = au(a);
            au(a) = a + 1;
            stats_.list_writes += 2;
            mod_c(a - 1, i, b, j, comp, is_first);
        }
    }
}

long long gen_subset_pairs(int a, long i, int b, long j, const std::function<void(const SubsetPair&)>& visit) {
    if (a < 0 || b < 0 || i < 0 || j < 0) throw std::domain_error("gen_subset_pairs parameters must be nonnegative");
    SubsetPairGen gen(a, b);
    return gen.run(a, i, b, j, visit);
}

}  // namespace tatami
