#include <doctest.h>

#include "symgeo/chars.hpp"

using namespace symgeo;

TEST_CASE("characteristic number identities") {
    const CharNumbers x = char_from_e_sigma(54, -10);
    CHECK(x.c1_squared() == 78);
    CHECK(x.chi_h() == 11);
    CHECK(x.symplectic_parity());

    CHECK(char_from_e_sigma(22, -14).c1_squared() == 2);
    CHECK(char_from_e_sigma(22, -14).chi_h() == 2);

    CHECK_THROWS_AS((void)char_from_e_sigma(11, -6).chi_h(), Error);
}

TEST_CASE("closed_char rejects bad parity") {
    CHECK(closed_char(12, -8).e == 12);
    CHECK_THROWS_AS(closed_char(12, -7), Error);
    CHECK_THROWS_AS(closed_char(7, -2), Error);
}

TEST_CASE("char_from_c_chi inverts the characteristic map") {
    for (i64 chi = 1; chi <= 20; ++chi) {
        for (i64 c = 0; c <= 8 * chi - 2; ++c) {
            const CharNumbers x = char_from_c_chi(c, chi);
            CHECK(x.c1_squared() == c);
            CHECK(x.chi_h() == chi);
            CHECK(x.symplectic_parity());
        }
    }
    // outside the cone the linear inversion still holds
    const CharNumbers y = char_from_c_chi(80, 10);
    CHECK(y.c1_squared() == 80);
    CHECK(y.chi_h() == 10);
}

TEST_CASE("geography cone membership") {
    CHECK(in_geography_cone(0, 1));
    CHECK(in_geography_cone(6, 1));
    CHECK_FALSE(in_geography_cone(7, 1));
    CHECK_FALSE(in_geography_cone(-1, 1));
    CHECK_FALSE(in_geography_cone(0, 0));
    CHECK_FALSE(in_geography_cone(3, -2));
    CHECK(in_geography_cone(78, 11));
    CHECK(in_geography_cone(8 * 11 - 2, 11));
    CHECK_FALSE(in_geography_cone(8 * 11 - 1, 11));
}

TEST_CASE("exception set is exactly four pairs") {
    int hits = 0;
    for (i64 chi = 1; chi <= 30; ++chi)
        for (i64 c = 0; c <= 8 * chi - 2; ++c)
            if (is_exception(c, chi)) ++hits;
    CHECK(hits == 4);
    CHECK(is_exception(5, 1));
    CHECK(is_exception(9, 2));
    CHECK(is_exception(11, 2));
    CHECK(is_exception(13, 2));
    CHECK_FALSE(is_exception(13, 3));
    CHECK_FALSE(is_exception(3, 1));
}
