#include <doctest.h>

#include <stdexcept>

#include <random>

#include "tatami/intpoly.hpp"

using namespace tatami;

namespace {

IntPoly poly(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("basic arithmetic") {
    CHECK(poly({1, 1}) * poly({1, 0, 1}) == poly({1, 1, 1, 1}));
    CHECK(poly({1, 2, 3}).reciprocal() == poly({3, 2, 1}));
    CHECK(exact_divide(poly({-1, 0, 1}), poly({-1, 1})) == poly({1, 1}));
    CHECK(poly({}).degree() == -1);
    CHECK(poly({0, 0}).is_zero());
    CHECK((poly({1, 2}) + poly({1, -2})) == poly({2}));
    CHECK((poly({1, 2}) - poly({1, 2})).is_zero());
    CHECK(poly({1, 2, 3}).shifted(2) == poly({0, 0, 1, 2, 3}));
    CHECK(poly({0, 0, 5}).shifted(-2) == poly({5}));
    CHECK_THROWS_AS(poly({1, 2}).shifted(-1), std::domain_error);
}

TEST_CASE("exact division reports remainders") {
    try {
        exact_divide(poly({1, 0, 1}), poly({1, 1}));
        FAIL("expected ExactDivideError");
    } catch (const ExactDivideError& e) {
        CHECK(e.remainder == poly({2}));
    }
    CHECK_THROWS_AS(exact_divide(poly({1}), poly({})), std::domain_error);
}

TEST_CASE("one-plus-z^m helpers invert each other") {
    IntPoly p = poly({1, -2, 3, 0, 7});
    IntPoly q = p;
    q.mul_one_plus(3);
    CHECK(q == p * poly({1, 0, 0, 1}));
    q.div_one_plus(3);
    CHECK(q == p);
    IntPoly r = poly({1, 1, 1});
    CHECK_THROWS_AS(r.div_one_plus(1), std::domain_error);
}

TEST_CASE("evaluation, including homogeneous sign") {
    const IntPoly p = poly({-1, 0, 2});  // 2z^2 - 1
    CHECK(p.evaluate(mpz_class(3)) == 17);
    CHECK(p.evaluate(mpq_class(1, 2)) == mpq_class(-1, 2));
    CHECK(p.sign_at(mpq_class(1, 2)) == -1);
    CHECK(p.sign_at(mpq_class(1)) == 1);
    CHECK(p.sign_at(mpq_class(-3, 4)) == 1);
}

TEST_CASE("multiply-divide round trip with large coefficients") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<mpz_class> a(30), b(25);
        for (auto& c : a) c = mpz_class(rng()) * mpz_class(rng()) - mpz_class(rng());
        for (auto& c : b) c = mpz_class(rng()) * mpz_class(rng()) - mpz_class(rng());
        b.back() = 1;  // monic divisor
        const IntPoly pa(std::move(a)), pb(std::move(b));
        CHECK(exact_divide(pa * pb, pb) == pa);
    }
}
