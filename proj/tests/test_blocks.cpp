#include <doctest.h>

#include "symgeo/blocks.hpp"

using namespace symgeo;

TEST_CASE("catalog invariants: parity and nonnegative c1^2") {
    for (const std::string& name : catalog_names()) {
        std::vector<i64> params;
        if (name == "E" || name == "E'") params = {2};
        if (name == "FxG") params = {2, 3};
        const Block b = catalog(name, params);
        CHECK(b.ch.symplectic_parity());
        CHECK(b.ch.c1_squared() >= 0);
        // parametrized blocks append their parameters to the name
        CHECK(b.name.rfind(name, 0) == 0);
    }
}

TEST_CASE("block B carries the standard torus push-offs") {
    const Block b = catalog("B");
    CHECK(b.ch.e == 6);
    CHECK(b.ch.sigma == -2);
    REQUIRE(b.has_presentation);
    CHECK(b.complement.generators() == std::vector<std::string>{"t1", "t2"});
    CHECK(b.complement.relators().size() == 1);

    REQUIRE(b.tori.size() == 2);
    const TorusMarker& t1 = b.tori[0];
    CHECK(t1.name == "T1");
    CHECK(t1.mu.empty());
    CHECK(t1.m.empty());
    CHECK(t1.l == Word::gen("t2"));
    const TorusMarker& t2 = b.tori[1];
    CHECK(t2.m == Word::gen("t1"));
    CHECK(t2.l == Word::gen("t2"));

    REQUIRE(b.surfaces.size() == 3);
    const SurfaceMarker& f = b.surfaces[0];
    CHECK(f.name == "F");
    CHECK(f.genus == 2);
    CHECK(f.square == 0);
    CHECK(f.meridian_trivial);
    CHECK(f.dual_to == "H1");
    REQUIRE(f.images.size() == 4);
    CHECK(f.images[3] == Word::gen("t2"));

    const SurfaceMarker& h1 = b.surfaces[1];
    CHECK(h1.name == "H1");
    CHECK(h1.genus == 1);
    CHECK(h1.square == -1);
    CHECK(h1.dual_to == "F");

    CHECK(b.surfaces[2].name == "G");
    CHECK(b.surfaces[2].dual_to == "F");
    CHECK_FALSE(b.surfaces[2].has_images);
}

TEST_CASE("blocks C and D expose square -1 tori") {
    const Block c = catalog("C");
    CHECK(c.ch.e == 8);
    CHECK(c.ch.sigma == -4);
    CHECK(c.tori[0].m.empty());
    REQUIRE(c.surfaces.size() == 1);
    CHECK(c.surfaces[0].square == -1);

    const Block d = catalog("D");
    CHECK(d.ch.e == 10);
    CHECK(d.ch.sigma == -6);
    CHECK(d.tori[0].m == Word::gen("s1"));
    CHECK(d.tori[0].l == Word::gen("s1", -1));
    CHECK(d.surfaces[0].square == -1);
}

TEST_CASE("block A is the blown-up telescope head") {
    const Block a = catalog("A");
    CHECK(a.ch.e == 7);
    CHECK(a.ch.sigma == -3);
    REQUIRE(a.surfaces.size() == 1);
    CHECK(a.surfaces[0].genus == 3);
    CHECK(a.surfaces[0].square == 0);
    REQUIRE(a.surfaces[0].images.size() == 6);
    CHECK(a.surfaces[0].images[3] == Word::gen("t2"));
    CHECK(a.surfaces[0].images[5] == Word::gen("t1"));
}

TEST_CASE("the product block Z lists eight commutator tori") {
    const Block z = catalog("Z");
    CHECK(z.ch.e == 4);
    CHECK(z.ch.sigma == 0);
    REQUIRE(z.tori.size() == 8);
    // spot value fixed by the source: m5 = x2, l5 = b1^-1
    CHECK(z.tori[4].name == "S5");
    CHECK(z.tori[4].m == Word::gen("x2"));
    CHECK(z.tori[4].l == Word::gen("b1", -1));
    // every meridian is a commutator of two words, so exponent sums vanish
    CHECK(z.tori[0].mu == commutator(Word::gen("b1", -1), Word::gen("y1", -1)));
    const Word conj = Word::gen("b1") * Word::gen("a1", -1) * Word::gen("b1", -1);
    CHECK(z.tori[4].mu == commutator(conj, Word::gen("y2", -1)));
    for (const TorusMarker& t : z.tori) {
        CHECK_FALSE(t.mu.empty());
        for (const std::string& gen : z.complement.generators())
            CHECK(t.mu.exponent_sum(gen) == 0);
    }
}

TEST_CASE("elliptic blocks scale with the fiber count") {
    const Block e2 = catalog("E", {2});
    CHECK(e2.ch.e == 24);
    CHECK(e2.ch.sigma == -16);
    REQUIRE(e2.tori.size() == 1);
    CHECK(e2.tori[0].name == "fiber");
    CHECK(e2.tori[0].complement_simply_connected);
    CHECK_FALSE(e2.has_presentation);
    CHECK(e2.asserted_simply_connected);

    const Block ep = catalog("E'", {2});
    CHECK(ep.ch.e == 24);
    CHECK(ep.ch.sigma == -16);
    CHECK(ep.tori.empty());
    CHECK(ep.odd_intersection_form);
    CHECK(ep.asserted_minimal);

    CHECK_THROWS_AS(catalog("E", {0}), Error);
    CHECK_THROWS_AS(catalog("E"), Error);
}

TEST_CASE("product complements carry the surgered tori words") {
    const Block fg = catalog("FxG", {2, 3});
    CHECK(fg.ch.e == (2 - 4) * (2 - 6));
    CHECK(fg.ch.sigma == 0);
    REQUIRE(fg.tori.size() == 6);
    CHECK(fg.tori[0].name == "Y1xA1");
    CHECK(fg.tori[0].m == Word::gen("y1"));
    CHECK(fg.tori[0].l == Word::gen("a1"));
    CHECK(fg.tori[0].mu == commutator(Word::gen("x1"), Word::gen("b1")));
    CHECK(fg.tori[1].name == "Y2xB1");
    CHECK(fg.tori[1].m == Word::gen("y2"));
    CHECK(fg.tori[1].l == Word::gen("b1"));
    CHECK(fg.tori[1].mu == commutator(Word::gen("x2"), Word::gen("a1")));

    REQUIRE(fg.surfaces.size() == 1);
    CHECK(fg.surfaces[0].name == "F");
    CHECK(fg.surfaces[0].genus == 2);
    REQUIRE(fg.surfaces[0].images.size() == 4);

    CHECK_THROWS_AS(catalog("FxG", {1, 1}), Error);
}

TEST_CASE("axiom blocks used by the positive-signature construction") {
    const Block x = catalog("Xtilde35");
    CHECK(x.ch.e == 10);
    CHECK(x.ch.sigma == -2);
    REQUIRE(x.tori.size() == 2);
    CHECK(x.tori[0].complement_simply_connected);
    CHECK(x.tori[1].complement_simply_connected);
    CHECK(x.odd_intersection_form);

    const Block h = catalog("H_lefschetz");
    CHECK(h.ch.e == 75);
    CHECK(h.ch.sigma == 25);
    CHECK_FALSE(h.asserted_simply_connected);
    REQUIRE(h.surfaces.size() == 1);
    CHECK(h.surfaces[0].genus == 18);
    CHECK(h.surfaces[0].square == 1);
    CHECK(h.surfaces[0].pi1_surjects);
}

TEST_CASE("sporadic table lookups") {
    struct Row {
        i64 c, chi, e, sigma;
    };
    const Row rows[] = {
        {1, 1, 11, -7},  {3, 1, 9, -5},   {1, 2, 23, -15}, {3, 2, 21, -13},
        {5, 2, 19, -11}, {7, 2, 17, -9},  {15, 3, 21, -9}, {17, 3, 19, -7},
        {19, 3, 17, -5},
    };
    for (const Row& r : rows) {
        const auto b = sporadic_lookup(r.c, r.chi);
        REQUIRE_MESSAGE(b.has_value(), r.c << "," << r.chi);
        CHECK(b->ch.e == r.e);
        CHECK(b->ch.sigma == r.sigma);
        CHECK(b->asserted_simply_connected);
        CHECK(b->asserted_minimal);
        CHECK(b->odd_intersection_form);
    }
    CHECK_FALSE(sporadic_lookup(1, 3).has_value());
    CHECK_FALSE(sporadic_lookup(9, 2).has_value());

    // the two pieces reused by the odd-c planner carry a marked torus
    CHECK(sporadic_lookup(1, 2)->tori.size() == 1);
    CHECK(sporadic_lookup(7, 2)->tori.size() == 1);
    CHECK(sporadic_lookup(3, 2)->tori.empty());
}

TEST_CASE("unknown names are rejected") {
    CHECK_THROWS_AS(catalog("nope"), Error);
}
