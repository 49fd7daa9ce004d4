#include <doctest.h>

#include <stdexcept>

#include <set>

#include "tatami/oracle.hpp"
#include "tatami/ternary.hpp"

using namespace tatami;

TEST_CASE("diagonal lengths") {
    CHECK(diagonal_length(10, Diagonal{Side::Left, 5, FlipDir::Up}) == 4);
    CHECK(diagonal_length(10, Diagonal{Side::Left, 5, FlipDir::Down}) == 5);
    CHECK(diagonal_length(17, Diagonal{Side::Top, 6, FlipDir::RightWard}) == 10);
    CHECK_THROWS_AS(diagonal_length(10, Diagonal{Side::Left, 4, FlipDir::Up}), std::domain_error);  // parity
    CHECK_THROWS_AS(monomino_side(10, 9), std::domain_error);
}

TEST_CASE("code parsing round-trips") {
    const TernaryCode code = TernaryCode::parse(10, "0,1,-1,0,0,1,-1,0");
    CHECK(code.size() == 8);
    CHECK(code.symbol(2) == 1);
    CHECK(code.symbol(3) == -1);
    CHECK(code.to_string() == "0,1,-1,0,0,1,-1,0");
    CHECK(TernaryCode::parse(2, "").size() == 0);
    CHECK_THROWS_AS(TernaryCode::parse(10, "0,1"), std::invalid_argument);
    CHECK_THROWS_AS(TernaryCode::parse(4, "0,2"), std::domain_error);
    CHECK_THROWS_AS(TernaryCode::parse(4, "0,x"), std::invalid_argument);
}

TEST_CASE("type 2 conflicts per the published table") {
    {  // lup_3 and rup_6 at n=10: i <= j-1
        TernaryCode code(10);
        code.set_symbol(3, 1);
        code.set_symbol(6, 1);
        const ValidationReport rep = validate_code(code);
        CHECK(!rep.ok);
        CHECK(rep.violations.front().kind == ViolationKind::Type2Conflict);
    }
    {  // tleft_4 and bleft_7 at n=11: n <= i+j
        TernaryCode code(11);
        code.set_symbol(4, -1);
        code.set_symbol(7, -1);
        const ValidationReport rep = validate_code(code);
        CHECK(!rep.ok);
        CHECK(rep.violations.front().kind == ViolationKind::Type2Conflict);
    }
    CHECK(validate_code(TernaryCode(10)).ok);  // all zeros
}

TEST_CASE("type 1 conflicts: same boundary, toward each other") {
    TernaryCode code(10);  // lup_1 vs ldown_3: left side, indices 1 < 3
    code.set_symbol(1, 1);
    code.set_symbol(3, -1);
    const ValidationReport rep = validate_code(code);
    CHECK(!rep.ok);
    CHECK(rep.violations.front().kind == ViolationKind::Type1Conflict);
}

TEST_CASE("decoding single flips") {
    {  // ldown_1 at n=10 contributes 1 vertical domino
        TernaryCode code(10);
        code.set_symbol(1, -1);
        const Covering c = decode_code(code);
        CHECK(validate_covering(c).ok);
        const TileCensus cen = tile_census(c);
        CHECK(cen.vertical == 1);
        CHECK(cen.horizontal == 44);
    }
    {  // lup_1 at n=8 contributes 6
        TernaryCode code(8);
        code.set_symbol(1, 1);
        const TileCensus cen = tile_census(decode_code(code));
        CHECK(cen.vertical == 6);
        CHECK(cen.horizontal == 22);
        CHECK(cen.monominoes == 8);
    }
    CHECK(canonical_key(decode_code(TernaryCode(10))) == canonical_key(running_bond(10)));
}

TEST_CASE("the published 10x10 example code decodes (with a trailing 0 appended)") {
    // Printed with 7 symbols; n-2 = 8, so the last movable monomino is unflipped.
    const TernaryCode code = TernaryCode::parse(10, "0,1,-1,0,0,1,-1,0");
    CHECK(validate_code(code).ok);
    const Covering c = decode_code(code);
    CHECK(validate_covering(c).ok);
    const TileCensus cen = tile_census(c);
    // flips: rup_2 (2), ldown_3 (3), rup_6 (6), ldown_7 (7) vertical dominoes
    CHECK(cen.vertical == 2 + 3 + 6 + 7);
}

TEST_CASE("decode rejects conflicting codes") {
    TernaryCode code(10);
    code.set_symbol(3, 1);
    code.set_symbol(6, 1);
    CHECK_THROWS_AS(decode_code(code), std::invalid_argument);
}

TEST_CASE("valid-code counts and injectivity") {
    for (int n = 2; n <= 9; ++n) {
        const auto codes = enumerate_valid_codes(n);
        const std::size_t expect = n == 2 ? 1 : static_cast<std::size_t>(n) << (n - 3);
        CHECK(codes.size() == expect);
        std::set<std::string> keys;
        for (const TernaryCode& code : codes) {
            const Covering c = decode_code(code);
            CHECK(validate_covering(c).ok);
            keys.insert(canonical_key(c));
        }
        CHECK(keys.size() == codes.size());
    }
}

TEST_CASE("double flip round-trips to the bond") {
    TernaryCode code(9);
    code.set_symbol(2, 1);
    const Covering flipped = decode_code(code);
    CHECK(canonical_key(flipped) != canonical_key(running_bond(9)));
    code.set_symbol(2, 0);
    CHECK(canonical_key(decode_code(code)) == canonical_key(running_bond(9)));
}
