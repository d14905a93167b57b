#include <doctest.h>

#include "symgeo/evaluate.hpp"

using namespace symgeo;

namespace {

ManifoldState block_state(const std::string& name, const std::vector<i64>& params = {}) {
    return state_from_block(catalog(name, params));
}

// relators are stored cyclically canonicalized, so match up to inversion
bool has_kill_relator(const ManifoldState& st, const std::string& gen) {
    for (const Word& r : st.pres.relators())
        if (r == Word::gen(gen) || r == Word::gen(gen, -1)) return true;
    return false;
}

} // namespace

TEST_CASE("torus surgery adds the surgery relator and consumes the torus") {
    ManifoldState b = block_state("B");
    ManifoldState after = apply_luttinger(b, "T1", "l", 1);
    CHECK(after.ch == b.ch);
    CHECK(after.find_torus("T1") == nullptr);
    CHECK(after.find_torus("T2") != nullptr);
    // mu * l = t2 lands in the relators
    CHECK(has_kill_relator(after, "t2"));
    CHECK(after.minimality_chain.size() == b.minimality_chain.size() + 1);

    CHECK_THROWS_AS(apply_luttinger(b, "T9", "l", 1), Error);
    CHECK_THROWS_AS(apply_luttinger(b, "T1", "q", 1), Error);
    // axiom blocks carry no presentation to surger
    CHECK_THROWS_AS(apply_luttinger(block_state("E", {1}), "fiber", "m", 1), Error);
}

TEST_CASE("default torus-torus sum telescopes the chain relators") {
    ManifoldState b = block_state("B");
    ManifoldState c = block_state("C");
    ManifoldState s = apply_sum(b, "T2", c, "T1", {});

    CHECK(s.ch.e == 14);
    CHECK(s.ch.sigma == -6);
    CHECK(s.find_torus("T1") != nullptr); // B side head
    CHECK(s.find_torus("T2") != nullptr); // C side tail
    CHECK(s.find_torus("T2")->m == Word::gen("y"));

    // m_B = t1 is identified with m_C = 1, killing t1
    CHECK(has_kill_relator(s, "t1"));

    // neither soundness flag trips on the bridged default gluing
    CHECK_FALSE(s.pres_may_add_relations);
    CHECK_FALSE(s.pres_may_lack_relations);

    // B's surfaces survive, C's square -1 torus arrives renamed
    CHECK(s.find_surface("F") != nullptr);
    CHECK(s.find_surface("H1") != nullptr);
    CHECK(s.find_surface("H1_2") != nullptr);
}

TEST_CASE("sum along the fiber surface drops its duals") {
    ManifoldState b = block_state("B");
    ManifoldState fg = block_state("FxG", {2, 1});
    ManifoldState s = apply_sum(b, "F", fg, "F", {});

    CHECK(s.ch.e == 10); // 6 + 0 + 4g - 4 with g = 2
    CHECK(s.ch.sigma == -2);
    CHECK(s.find_surface("F") == nullptr);
    CHECK(s.find_surface("H1") == nullptr); // dual to the consumed fiber
    CHECK(s.find_surface("G") == nullptr);
    CHECK(s.find_torus("T1") != nullptr);
    CHECK(s.find_torus("Y1xA1") != nullptr);

    // genus >= 2 sums append the minimality citation
    CHECK(!s.minimality_chain.empty());
    CHECK(s.minimality_chain.back().find("Usher") != std::string::npos);

    // F's meridian is trivial in B, so the gluing is bridged
    CHECK_FALSE(s.pres_may_add_relations);
}

TEST_CASE("unbridged surface sums poison triviality claims") {
    ManifoldState a = block_state("FxG", {2, 1});
    ManifoldState b = block_state("FxG", {2, 1});
    ManifoldState s = apply_sum(a, "F", b, "F", {});
    CHECK(s.pres_may_add_relations);
    const Pi1Report rep = certify(s);
    CHECK(rep.status != Pi1Status::ProvedTrivial);
}

TEST_CASE("summing a presentation side with a trivial-complement axiom torus") {
    ManifoldState b = block_state("B");
    ManifoldState e1 = block_state("E", {1});
    ManifoldState s = apply_sum(b, "T1", e1, "fiber", {});

    CHECK(s.ch.e == 18);
    CHECK(s.ch.sigma == -10);
    CHECK(s.has_presentation);
    // the complement-simply-connected side kills mu, m, l of B's T1
    CHECK(has_kill_relator(s, "t2"));
    CHECK_FALSE(s.asserted_pi1_trivial);
    CHECK(certify(s).status == Pi1Status::AbelianizationNontrivial);
}

TEST_CASE("summing two axiom blocks keeps assertions only when both complements vanish") {
    ManifoldState a = block_state("E", {1});
    ManifoldState b = block_state("E", {2});
    ManifoldState s = apply_sum(a, "fiber", b, "fiber", {});
    CHECK(s.ch.e == 36);
    CHECK(s.ch.sigma == -24);
    CHECK_FALSE(s.has_presentation);
    CHECK(s.asserted_pi1_trivial);
    CHECK(certify(s).status == Pi1Status::AssertedTrivial);

    // an axiom piece with no triviality claim downgrades the result
    ManifoldState h = block_state("H_lefschetz");
    ManifoldState hb = apply_blow_up(h, std::string("Sigma"));
    ManifoldState e45 = block_state("E", {45});
    // genus mismatch guards fire before any pi1 logic
    CHECK_THROWS_AS(apply_sum(hb, "Sigma", e45, "fiber", {}), Error);
}

TEST_CASE("sum preconditions") {
    ManifoldState b = block_state("B");
    ManifoldState c = block_state("C");
    // squares must cancel: F has square 0, H1 square -1
    CHECK_THROWS_AS(apply_sum(b, "F", c, "H1", {}), Error);
    CHECK_THROWS_AS(apply_sum(b, "T2", c, "nope", {}), Error);
}

TEST_CASE("blow-up arithmetic and surface transform") {
    ManifoldState b = block_state("B");
    ManifoldState bare = apply_blow_up(b, std::nullopt);
    CHECK(bare.ch.e == 7);
    CHECK(bare.ch.sigma == -3);
    CHECK(bare.sticky_odd);
    CHECK(bare.odd_form_witness());

    ManifoldState at = apply_blow_up(b, std::string("F"));
    CHECK(at.ch.e == 7);
    CHECK_FALSE(at.sticky_odd);
    const SurfaceMarker* f = at.find_surface("F");
    REQUIRE(f != nullptr);
    CHECK(f->square == -1);
    CHECK(f->meridian_trivial);
    CHECK(f->genus == 2);

    CHECK_THROWS_AS(apply_blow_up(b, std::string("nope")), Error);
}

TEST_CASE("resolving a dual pair merges markers and retargets duals") {
    ManifoldState b = block_state("B");
    ManifoldState r = apply_resolve(b, {"F", "H1"}, 1);
    CHECK(r.ch == b.ch);
    const SurfaceMarker* m = r.find_surface("F+H1");
    REQUIRE(m != nullptr);
    CHECK(m->genus == 3);
    CHECK(m->square == 1);
    REQUIRE(m->images.size() == 6);
    CHECK(m->images[3] == Word::gen("t2"));
    CHECK(m->images[5] == Word::gen("t1"));
    CHECK(r.find_surface("F") == nullptr);
    CHECK(r.find_surface("H1") == nullptr);
    // G pointed at F; it now points at the merged surface
    REQUIRE(r.find_surface("G") != nullptr);
    CHECK(r.find_surface("G")->dual_to == "F+H1");
}

TEST_CASE("resolve with repeated square-zero components") {
    ManifoldState st;
    st.ch = {4, 0};
    SurfaceMarker t;
    t.name = "T";
    t.genus = 1;
    t.square = 0;
    SurfaceMarker u = t;
    u.name = "U";
    SurfaceMarker v = t;
    v.name = "V";
    st.surfaces = {t, u, v};

    ManifoldState r = apply_resolve(st, {"T", "U", "V"}, 2);
    const SurfaceMarker* m = r.find_surface("T+U+V");
    REQUIRE(m != nullptr);
    CHECK(m->genus == 3); // 1+1+1 + 2 - 2
    CHECK(m->square == 4);

    // repeats of a square-zero marker are allowed and grouped in the name
    ManifoldState r2 = apply_resolve(st, {"T", "T", "U"}, 2);
    const SurfaceMarker* m2 = r2.find_surface("2T+U");
    REQUIRE(m2 != nullptr);
    CHECK(m2->genus == 3);
    CHECK(m2->square == 4);

    // too few intersection points cannot connect the components
    CHECK_THROWS_AS(apply_resolve(st, {"T", "U", "V"}, 1), Error);

    // repeating a marker of nonzero square is rejected
    SurfaceMarker w = t;
    w.name = "W";
    w.square = 1;
    st.surfaces.push_back(w);
    CHECK_THROWS_AS(apply_resolve(st, {"W", "W"}, 1), Error);
}

TEST_CASE("evaluate folds a recipe tree to the same state as manual application") {
    RecipePtr r = sum(luttinger(base("B"), "T1", "l", 1), "T2", base("C"), "T1", {});
    ManifoldState via_tree = evaluate(*r);

    ManifoldState manual =
        apply_sum(apply_luttinger(block_state("B"), "T1", "l", 1), "T2", block_state("C"),
                  "T1", {});
    CHECK(via_tree.ch == manual.ch);
    CHECK(via_tree.pres.relators() == manual.pres.relators());
    CHECK(via_tree.tori.size() == manual.tori.size());
}

TEST_CASE("recipe JSON round-trips and hashes stably") {
    RecipePtr r = sum(luttinger(base("B"), "T1", "l", 1), "T2",
                      blow_up(resolve(base("B"), {"F", "H1"}, 1), std::string("F+H1")),
                      "T1", {{Word::gen("t1"), Word::gen("t2", -1), -1}});
    const auto j = recipe_to_json(*r);
    RecipePtr back = recipe_from_json(j);
    CHECK(recipe_to_json(*back) == j);
    CHECK(recipe_id(*back) == recipe_id(*r));

    // field spot checks on the serialized form
    CHECK(j["op"] == "sum");
    CHECK(j["leftSurface"] == "T2");
    CHECK(j["gluing"].size() == 1);
    CHECK(j["gluing"][0]["sign"] == -1);
    CHECK(j["left"]["op"] == "luttinger");
    CHECK(j["left"]["curve"] == "l");
    CHECK(j["right"]["op"] == "blowup");
    CHECK(j["right"]["at"] == "F+H1");
    CHECK(j["right"]["child"]["op"] == "resolve");
    CHECK(j["right"]["child"]["intersections"] == 1);

    // words flatten to [gen, exp, ...]
    const auto wj = word_to_json(Word::gen("t2", -1));
    REQUIRE(wj.size() == 2);
    CHECK(wj[0] == "t2");
    CHECK(wj[1] == -1);
    CHECK(word_from_json(wj) == Word::gen("t2", -1));
}

TEST_CASE("degenerate surgery on a word-less torus curve is rejected") {
    // B's T1 has m = 1: surgery along the m curve would not be a valid
    // surgery relator, the torus words must be present
    ManifoldState b = block_state("B");
    ManifoldState after = apply_luttinger(b, "T1", "m", 1);
    // mu = 1 and m = 1: the relator is empty, the surgery only consumes
    CHECK(after.find_torus("T1") == nullptr);
    CHECK(after.pres.relators().size() == b.pres.relators().size());
}
