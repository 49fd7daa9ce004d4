#include <doctest.h>

#include <stdexcept>

#include <set>

#include "tatami/oracle.hpp"

using namespace tatami;

TEST_CASE("enumeration counts n * 2^(n-3)") {
    long long expected[] = {0, 0, 1, 3, 8, 20, 48, 112, 256, 576};
    for (int n = 2; n <= 9; ++n) {
        long long count = 0;
        enumerate_tn(n, [&](const Covering& c) {
            CHECK(validate_covering(c).ok);
            ++count;
        });
        CHECK(count == expected[n]);
    }
}

TEST_CASE("enumeration has no duplicates") {
    std::set<std::string> keys;
    long long count = 0;
    enumerate_tn(8, [&](const Covering& c) {
        keys.insert(canonical_key(c));
        ++count;
    });
    CHECK(count == 256);
    CHECK(keys.size() == 256);
}

TEST_CASE("histograms match the published table rows") {
    const CensusHistogram h4 = vertical_histogram(4);
    CHECK(h4.total == 8);
    CHECK(h4.by_vertical == std::map<int, long long>{{0, 1}, {1, 2}, {2, 3}, {3, 2}});

    const CensusHistogram h5 = vertical_histogram(5);
    CHECK(h5.by_vertical == std::map<int, long long>{{0, 1}, {1, 2}, {2, 3}, {3, 6}, {4, 4}, {5, 2}, {6, 2}});

    const CensusHistogram h8 = vertical_histogram(8);
    CHECK(h8.by_vertical.at(7) == 24);
}

TEST_CASE("practical bounds are enforced") {
    CHECK_THROWS_AS(enumerate_tn(1, [](const Covering&) {}), std::domain_error);
    CHECK_THROWS_AS(enumerate_tn(13, [](const Covering&) {}), std::domain_error);
    CHECK_THROWS_AS(enumerate_valid_codes(15), std::domain_error);
}

TEST_CASE("valid-code enumeration counts") {
    CHECK(enumerate_valid_codes(2).size() == 1);
    CHECK(enumerate_valid_codes(6).size() == 48);
    CHECK(enumerate_valid_codes(10).size() == 1280);
}
