#include "symgeo/blocks.hpp"

#include <algorithm>

namespace symgeo {

namespace {

Word g(const std::string& name, i64 exp = 1) { return Word::gen(name, exp); }
Word one() { return Word(); }

TorusMarker lag_torus(std::string name, Word mu, Word m, Word l, std::string origin) {
    TorusMarker t;
    t.name = std::move(name);
    t.has_words = true;
    t.mu = std::move(mu);
    t.m = std::move(m);
    t.l = std::move(l);
    t.origin = std::move(origin);
    return t;
}

TorusMarker axiom_torus(std::string name, std::string origin, bool csc) {
    TorusMarker t;
    t.name = std::move(name);
    t.has_words = false;
    t.complement_simply_connected = csc;
    t.origin = std::move(origin);
    return t;
}

Block make_B() {
    Block b;
    b.name = "B";
    b.ch = closed_char(6, -2);
    b.has_presentation = true;
    b.complement = Presentation({"t1", "t2"}, {commutator(g("t1"), g("t2"))});
    b.tori = {lag_torus("T1", one(), one(), g("t2"), "B"),
              lag_torus("T2", one(), g("t1"), g("t2"), "B")};

    SurfaceMarker F;
    F.name = "F";
    F.genus = 2;
    F.square = 0;
    F.has_images = true;
    F.images = {one(), one(), one(), g("t2")};
    F.meridian_trivial = true;
    F.dual_to = "H1";
    F.origin = "B";

    SurfaceMarker H1;
    H1.name = "H1";
    H1.genus = 1;
    H1.square = -1;
    H1.has_images = true;
    H1.images = {one(), g("t1")};
    H1.dual_to = "F";
    H1.origin = "B";

    SurfaceMarker G;
    G.name = "G";
    G.genus = 2;
    G.square = 0;
    G.dual_to = "F";
    G.origin = "B";

    b.surfaces = {F, H1, G};
    b.asserted_minimal = true;
    b.minimality_note = "B minimal: surgery on a torus fibration piece, no (-1)-spheres";
    b.citation = "telescoping block with e=6, sigma=-2: genus-2 surface F of square 0, "
                 "dual -1 torus H1, Lagrangian tori T1, T2";
    return b;
}

Block make_A() {
    Block b;
    b.name = "A";
    b.ch = closed_char(7, -3);
    b.has_presentation = true;
    b.complement = Presentation({"t1", "t2"}, {commutator(g("t1"), g("t2"))});
    b.tori = {lag_torus("T1", one(), one(), g("t2"), "A"),
              lag_torus("T2", one(), g("t1"), g("t2"), "A")};

    SurfaceMarker F3;
    F3.name = "F3";
    F3.genus = 3;
    F3.square = 0;
    F3.has_images = true;
    F3.images = {one(), one(), one(), g("t2"), one(), g("t1")};
    F3.meridian_trivial = true; // exceptional sphere of the blow-up is dual
    F3.origin = "A";
    b.surfaces = {F3};

    b.minimality_note = "A relatively minimal along F3: every (-1)-sphere meets F3 (Li)";
    b.citation = "blow-up of B at a point of F resolved with H1: genus-3 surface F3 of "
                 "square 0 with dual exceptional sphere";
    return b;
}

Block make_C() {
    Block b;
    b.name = "C";
    b.ch = closed_char(8, -4);
    b.has_presentation = true;
    b.complement = Presentation({"y", "a2"}, {commutator(g("y"), g("a2"))});
    b.tori = {lag_torus("T1", one(), one(), g("a2"), "C"),
              lag_torus("T2", one(), g("y"), g("a2"), "C")};

    SurfaceMarker H1;
    H1.name = "H1";
    H1.genus = 1;
    H1.square = -1;
    H1.origin = "C";
    b.surfaces = {H1};

    b.asserted_minimal = true;
    b.minimality_note = "C minimal: fiber-sum piece with no (-1)-spheres";
    b.citation = "telescoping block with e=8, sigma=-4 and a square -1 torus disjoint "
                 "from T1, T2";
    return b;
}

Block make_D() {
    Block b;
    b.name = "D";
    b.ch = closed_char(10, -6);
    b.has_presentation = true;
    b.complement = Presentation({"s1", "t1"}, {commutator(g("s1"), g("t1"))});
    b.tori = {lag_torus("T1", one(), g("s1"), g("s1", -1), "D"),
              lag_torus("T2", one(), g("t1"), g("s1"), "D")};

    SurfaceMarker H1;
    H1.name = "H1";
    H1.genus = 1;
    H1.square = -1;
    H1.origin = "D";
    b.surfaces = {H1};

    b.asserted_minimal = true;
    b.minimality_note = "D minimal: fiber-sum piece with no (-1)-spheres";
    b.citation = "telescoping block with e=10, sigma=-6 and a square -1 torus disjoint "
                 "from T1, T2";
    return b;
}

Block make_Z() {
    Block b;
    b.name = "Z";
    b.ch = closed_char(4, 0);
    b.has_presentation = true;
    b.complement = Presentation({"x1", "y1", "x2", "y2", "a1", "b1", "a2", "b2"}, {});

    const Word x1 = g("x1"), y1 = g("y1"), x2 = g("x2"), y2 = g("y2");
    const Word a1 = g("a1"), b1 = g("b1"), a2 = g("a2"), b2 = g("b2");

    b.tori = {
        lag_torus("S1", commutator(b1.inverse(), y1.inverse()), x1, a1, "Z"),
        lag_torus("S2", commutator(x1.inverse(), b1), y1, b1 * a1 * b1.inverse(), "Z"),
        lag_torus("S3", commutator(b2.inverse(), y1.inverse()), x1, a2, "Z"),
        lag_torus("S4", commutator(x1.inverse(), b2), y1, b2 * a2 * b2.inverse(), "Z"),
        lag_torus("S5", commutator(b1 * a1.inverse() * b1.inverse(), y2.inverse()), x2,
                  b1.inverse(), "Z"),
        lag_torus("S6", commutator(x2.inverse(), b1 * a1 * b1.inverse()), y2,
                  b1 * a1 * b1.inverse() * a1.inverse() * b1.inverse(), "Z"),
        lag_torus("S7", commutator(b2 * a2.inverse() * b2.inverse(), y2.inverse()), x2,
                  b2.inverse(), "Z"),
        lag_torus("S8", commutator(x2.inverse(), b2 * a2 * b2.inverse()), y2,
                  b2 * a2 * b2.inverse() * a2.inverse() * b2.inverse(), "Z"),
    };

    std::vector<std::string> blockers;
    for (const auto& t : b.tori) blockers.push_back(t.name);
    auto ambient = [&](const Word& w) { b.ambient.push_back(AmbientRelator{w, blockers}); };
    ambient(commutator(x1, y1) * commutator(x2, y2));
    ambient(commutator(a1, b1) * commutator(a2, b2));
    for (const Word& u : {x1, y1, x2, y2})
        for (const Word& v : {a1, b1, a2, b2}) ambient(commutator(u, v));

    b.asserted_minimal = true;
    b.minimality_note = "Z minimal: product of genus-2 surfaces, aspherical";
    b.citation = "product of two genus-2 surfaces with eight disjoint Lagrangian tori "
                 "S1..S8 carrying surgery data";
    return b;
}

Block make_E(i64 k) {
    if (k < 1) throw Error("E(k) requires k >= 1");
    Block b;
    b.name = "E(" + std::to_string(k) + ")";
    b.ch = closed_char(12 * k, -8 * k);
    b.asserted_simply_connected = true;
    b.tori = {axiom_torus("fiber", b.name, true)};
    if (k >= 2) {
        b.asserted_minimal = true;
        b.minimality_note = b.name + " minimal (elliptic surface, k >= 2)";
    } else {
        b.minimality_note = "E(1) relatively minimal along its fiber";
    }
    b.citation = "simply connected elliptic surface without multiple fibers; the fiber "
                 "torus has simply connected complement";
    return b;
}

Block make_Eprime(i64 k) {
    if (k < 1) throw Error("E'(k) requires k >= 1");
    Block b;
    b.name = "E'(" + std::to_string(k) + ")";
    b.ch = closed_char(12 * k, -8 * k);
    b.asserted_simply_connected = true;
    b.asserted_minimal = true;
    b.minimality_note = b.name + " minimal (two log transforms)";
    b.odd_intersection_form = true;
    b.citation = "simply connected minimal manifold with the invariants of E(k) and odd "
                 "intersection form, from relatively prime log transforms";
    return b;
}

Block make_Xtilde35() {
    Block b;
    b.name = "Xtilde35";
    b.ch = closed_char(10, -2);
    b.asserted_simply_connected = true;
    b.asserted_minimal = true;
    b.minimality_note = "Xtilde35 minimal";
    b.odd_intersection_form = true;
    b.tori = {axiom_torus("T3", b.name, true), axiom_torus("T4", b.name, true)};
    b.citation = "simply connected minimal manifold with e=10, sigma=-2 containing a "
                 "pair of symplectic tori T3, T4 with simply connected complement";
    return b;
}

Block make_H() {
    Block b;
    b.name = "H_lefschetz";
    b.ch = closed_char(75, 25);
    SurfaceMarker s;
    s.name = "Sigma";
    s.genus = 18;
    s.square = 1;
    s.pi1_surjects = true; // fibration section argument; complement inclusion iso
    s.origin = "H";
    b.surfaces = {s};
    b.asserted_minimal = true;
    b.minimality_note = "H_lefschetz minimal: surface of general type on the c1^2 = 9 chi line";
    b.citation = "genus-16 Lefschetz fibration over a genus-2 surface with a square -1 "
                 "section; Sigma is the resolved fiber-plus-section, genus 18, square 1, "
                 "with pi1(Sigma) -> pi1(H) onto";
    return b;
}

Block sporadic(std::string name, i64 e, i64 sigma, std::string citation, bool with_torus) {
    Block b;
    b.name = std::move(name);
    b.ch = closed_char(e, sigma);
    b.asserted_simply_connected = true;
    b.asserted_minimal = true;
    b.minimality_note = b.name + " minimal (quoted)";
    b.odd_intersection_form = true;
    if (with_torus) b.tori = {axiom_torus("T", b.name, true)};
    b.citation = std::move(citation);
    return b;
}

} // namespace

Block product_surface_complement(i64 f, i64 g_) {
    if (f < 2) throw Error("product_surface_complement requires f >= 2");
    if (g_ < 0) throw Error("product_surface_complement requires g >= 0");
    Block b;
    b.name = "FxG(" + std::to_string(f) + "," + std::to_string(g_) + ")";
    b.ch = closed_char((2 - 2 * f) * (2 - 2 * g_), 0);
    b.has_presentation = true;

    std::vector<std::string> gens;
    for (i64 i = 1; i <= f; ++i) {
        gens.push_back("x" + std::to_string(i));
        gens.push_back("y" + std::to_string(i));
    }
    for (i64 j = 1; j <= g_; ++j) {
        gens.push_back("a" + std::to_string(j));
        gens.push_back("b" + std::to_string(j));
    }
    b.complement = Presentation(gens, {});

    std::vector<std::string> blockers;
    for (i64 j = 1; j <= g_; ++j) {
        std::string aj = "a" + std::to_string(j), bj = "b" + std::to_string(j);
        b.tori.push_back(lag_torus("Y1xA" + std::to_string(j), commutator(g("x1"), g(bj)),
                                   g("y1"), g(aj), b.name));
        b.tori.push_back(lag_torus("Y2xB" + std::to_string(j), commutator(g("x2"), g(aj)),
                                   g("y2"), g(bj), b.name));
    }
    for (const auto& t : b.tori) blockers.push_back(t.name);

    auto ambient = [&](const Word& w) {
        if (!w.empty()) b.ambient.push_back(AmbientRelator{w, blockers});
    };
    Word surfF, surfG;
    for (i64 i = 1; i <= f; ++i)
        surfF = surfF * commutator(g("x" + std::to_string(i)), g("y" + std::to_string(i)));
    for (i64 j = 1; j <= g_; ++j)
        surfG = surfG * commutator(g("a" + std::to_string(j)), g("b" + std::to_string(j)));
    ambient(surfF);
    ambient(surfG);
    for (i64 i = 1; i <= f; ++i)
        for (i64 j = 1; j <= g_; ++j) {
            std::string xi = "x" + std::to_string(i), yi = "y" + std::to_string(i);
            std::string aj = "a" + std::to_string(j), bj = "b" + std::to_string(j);
            ambient(commutator(g(xi), g(aj)));
            ambient(commutator(g(xi), g(bj)));
            ambient(commutator(g(yi), g(aj)));
            ambient(commutator(g(yi), g(bj)));
        }

    SurfaceMarker F;
    F.name = "F";
    F.genus = f;
    F.square = 0;
    F.has_images = true;
    for (i64 i = 1; i <= f; ++i) {
        F.images.push_back(g("x" + std::to_string(i)));
        F.images.push_back(g("y" + std::to_string(i)));
    }
    F.origin = b.name;
    b.surfaces = {F};

    if (g_ >= 1) {
        b.asserted_minimal = true;
        b.minimality_note = b.name + " minimal: aspherical product";
    } else {
        b.minimality_note = b.name + ": ruled when g=0, no minimality claim";
    }
    b.citation = "product of a genus-" + std::to_string(f) + " and a genus-" +
                 std::to_string(g_) + " surface; complement of the fiber surface F and "
                 "the 2g Lagrangian surgery tori";
    return b;
}

std::optional<Block> sporadic_lookup(i64 c, i64 chi) {
    if (c == 1 && chi == 1)
        return sporadic("Barlow", 11, -7, "Barlow surface; minimality quoted (Kotschick)",
                        false);
    if (c == 3 && chi == 1)
        return sporadic("StipsiczSzabo", 9, -5,
                        "Stipsicz-Szabo manifold realizing (c1^2, chi) = (3, 1)", false);
    if (c == 1 && chi == 2)
        return sporadic("S11", 23, -15,
                        "Gompf's minimal manifold S_{1,1} with a square-0 symplectic "
                        "torus of simply connected complement",
                        true);
    if (c == 3 && chi == 2)
        return sporadic("R21", 21, -13, "Gompf's minimal manifold R_{2,1}", false);
    if (c == 5 && chi == 2)
        return sporadic("R22", 19, -11, "Gompf's minimal manifold R_{2,2}", false);
    if (c == 7 && chi == 2)
        return sporadic("X3_12", 17, -9,
                        "minimal manifold homeomorphic to 3CP^2 # 12 (-CP^2) containing "
                        "a symplectic torus with simply connected complement",
                        true);
    if (c == 15 && chi == 3)
        return sporadic("X5_14", 21, -9, "minimal manifold realizing (c1^2, chi) = (15, 3)",
                        false);
    if (c == 17 && chi == 3)
        return sporadic("X5_12", 19, -7, "minimal manifold realizing (c1^2, chi) = (17, 3)",
                        false);
    if (c == 19 && chi == 3)
        return sporadic("X5_10", 17, -5, "minimal manifold realizing (c1^2, chi) = (19, 3)",
                        false);
    return std::nullopt;
}

Block catalog(const std::string& name, const std::vector<i64>& params) {
    auto need = [&](size_t n) {
        if (params.size() != n)
            throw Error("block " + name + " expects " + std::to_string(n) + " parameter(s)");
    };
    if (name == "B") {
        need(0);
        return make_B();
    }
    if (name == "A") {
        need(0);
        return make_A();
    }
    if (name == "C") {
        need(0);
        return make_C();
    }
    if (name == "D") {
        need(0);
        return make_D();
    }
    if (name == "Z") {
        need(0);
        return make_Z();
    }
    if (name == "E") {
        need(1);
        return make_E(params[0]);
    }
    if (name == "E'") {
        need(1);
        return make_Eprime(params[0]);
    }
    if (name == "Xtilde35") {
        need(0);
        return make_Xtilde35();
    }
    if (name == "H_lefschetz") {
        need(0);
        return make_H();
    }
    if (name == "FxG") {
        need(2);
        return product_surface_complement(params[0], params[1]);
    }
    // sporadic entries are addressable by name as well
    static const std::pair<i64, i64> sporadic_keys[] = {{1, 1},  {3, 1},  {1, 2},
                                                        {3, 2},  {5, 2},  {7, 2},
                                                        {15, 3}, {17, 3}, {19, 3}};
    for (auto [c, chi] : sporadic_keys) {
        auto b = sporadic_lookup(c, chi);
        if (b && b->name == name) {
            need(0);
            return *b;
        }
    }
    throw Error("unknown block: " + name);
}

std::vector<std::string> catalog_names() {
    return {"B",      "A",           "C",   "D",   "Z",   "FxG",   "E",
            "E'",     "Xtilde35",    "H_lefschetz", "Barlow", "StipsiczSzabo",
            "S11",    "R21",         "R22", "X3_12", "X5_14", "X5_12", "X5_10"};
}

} // namespace symgeo
