#include <doctest.h>

#include "symgeo/presentation.hpp"

#include <algorithm>

using namespace symgeo;

namespace {
Word w(std::initializer_list<Letter> ls) { return Word(std::vector<Letter>(ls)); }
} // namespace

TEST_CASE("relators are canonicalized and deduplicated") {
    Presentation p({"a", "b"}, {});
    p.add_relator(commutator(Word::gen("a"), Word::gen("b")));
    // a rotation of the same relator
    p.add_relator(commutator(Word::gen("b"), Word::gen("a")));
    // its inverse
    p.add_relator(commutator(Word::gen("a"), Word::gen("b")).inverse());
    CHECK(p.relators().size() == 1);

    // conjugated copies collapse through cyclic reduction
    p.add_relator(w({{"b", 1}, {"a", 1}, {"b", -1}}));
    p.add_relator(w({{"b", -2}, {"a", 1}, {"b", 2}}));
    CHECK(p.relators().size() == 2);

    p.add_relator(Word::one());
    CHECK(p.relators().size() == 2);
}

TEST_CASE("unknown generators are rejected") {
    Presentation p({"a"}, {});
    CHECK_THROWS_AS(p.add_relator(Word::gen("z")), Error);
}

TEST_CASE("fresh_name suffixes from _2") {
    CHECK(fresh_name("t1", {"t1", "t2"}) == "t1_2");
    CHECK(fresh_name("t1", {"t1", "t1_2"}) == "t1_3");
    CHECK(fresh_name("x", {"y"}) == "x");
}

TEST_CASE("amalgamation with disjoint generators") {
    Presentation a({"x"}, {});
    Presentation b({"y"}, {});
    AmalgamationResult r =
        amalgamate(a, b, {{Word::gen("x"), Word::gen("y"), 1}});
    CHECK(r.rename_right.empty());
    CHECK(r.presentation.generators() == std::vector<std::string>{"x", "y"});
    REQUIRE(r.presentation.relators().size() == 1);
    // x y^-1 up to the stored canonical form
    CHECK(r.presentation.relators()[0].length() == 2);
}

TEST_CASE("amalgamation renames colliding right generators") {
    Presentation a({"t1", "t2"}, {commutator(Word::gen("t1"), Word::gen("t2"))});
    Presentation b({"t1", "t2"}, {commutator(Word::gen("t1"), Word::gen("t2"))});

    // identification words on the right are given in b's own alphabet
    AmalgamationResult r = amalgamate(
        a, b, {{Word::gen("t1"), Word::gen("t1"), 1}, {Word::gen("t2"), Word::gen("t2"), 1}});

    REQUIRE(r.rename_right.count("t1"));
    REQUIRE(r.rename_right.count("t2"));
    CHECK(r.rename_right.at("t1") == "t1_2");
    CHECK(r.rename_right.at("t2") == "t2_2");
    CHECK(r.presentation.generators().size() == 4);

    // the identification relators mention the renamed right generators
    bool uses_renamed = false;
    for (const Word& rel : r.presentation.relators())
        if (rel.mentions("t1_2") || rel.mentions("t2_2")) uses_renamed = true;
    CHECK(uses_renamed);
}

TEST_CASE("identification sign controls orientation") {
    Presentation a({"x"}, {});
    Presentation b({"y"}, {});
    AmalgamationResult plus = amalgamate(a, b, {{Word::gen("x"), Word::gen("y"), 1}});
    AmalgamationResult minus = amalgamate(a, b, {{Word::gen("x"), Word::gen("y"), -1}});
    REQUIRE(plus.presentation.relators().size() == 1);
    REQUIRE(minus.presentation.relators().size() == 1);
    // x y^-1 vs x y: both reduced two-syllable words, with opposite y exponents
    i64 eplus = plus.presentation.relators()[0].exponent_sum("y");
    i64 eminus = minus.presentation.relators()[0].exponent_sum("y");
    CHECK(eplus == -eminus);
    CHECK(eminus != 0);
}

TEST_CASE("empty identification words drop out") {
    Presentation a({"x"}, {});
    Presentation b({"y"}, {});
    AmalgamationResult r = amalgamate(a, b, {{Word::one(), Word::one(), 1}});
    CHECK(r.presentation.relators().empty());
    CHECK(r.presentation.generators().size() == 2);
}
