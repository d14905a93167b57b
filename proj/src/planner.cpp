#include "symgeo/planner.hpp"

#include <atomic>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace symgeo {

std::string to_string(PlanStatus s) {
    switch (s) {
    case PlanStatus::Realized: return "realized";
    case PlanStatus::Sporadic: return "sporadic";
    case PlanStatus::Exception: return "exception";
    case PlanStatus::OutOfRegion: return "out_of_region";
    case PlanStatus::Unplannable: return "unplannable";
    }
    throw Error("to_string: bad PlanStatus");
}

Decomposition arith_decompose(i64 m, i64 n) {
    if (n < 1 || m < 0 || m > 4 * n - 1)
        throw Error("arith_decompose: need n >= 1 and 0 <= m <= 4n - 1");

    Decomposition out;
    if (m == 0) {
        out = {0, 0, 0, 0, n};
    } else {
        const i64 l = std::max<i64>(0, n - m);
        const i64 s = (4 * n - 4 * l - m - 1) / 3;
        const i64 delta = 4 * n - 4 * l - m - 1 - 3 * s;
        const i64 r = n - l; // blocks available once k = l is set aside
        if (delta == 0)
            out = {1, 0, s, r - s - 1, l};
        else if (delta == 1 && s >= 1)
            out = {1, 0, s - 1, r - s - 1, l + 1};
        else if (delta == 1 && s == 0 && r >= 2)
            out = {2, 0, 0, r - 2, l};
        else if (delta == 1 && s == 0 && r == 1)
            out = {0, 1, 0, 0, l};
        else if (delta == 2 && s >= 2)
            out = {1, 0, s - 2, r - s - 1, l + 2};
        else if (delta == 2 && s == 1 && r >= 3)
            out = {2, 0, 0, r - 3, l + 1};
        else if (delta == 2 && s == 1 && r == 2)
            out = {0, 1, 0, 0, l + 1};
        else if (delta == 2 && s == 0 && r >= 2)
            out = {1, 1, 0, r - 2, l};
        else if (delta == 2 && s == 0 && r == 1)
            out = {0, 0, 1, 0, l};
        else
            throw Error("arith_decompose: case fell through");
    }

    const bool shape_ok = out.b >= 0 && out.c >= 0 && out.d >= 0 && out.g >= 0 &&
                          out.k >= 0 && (out.g == 0 || out.b >= 1);
    if (!shape_ok || out.d + 2 * out.c + 3 * out.b + 4 * out.g != m ||
        out.b + out.c + out.d + out.k + out.g != n)
        throw Error("arith_decompose: identities violated");
    return out;
}

namespace {

RecipePtr product_with_surgeries(i64 f, i64 g) {
    RecipePtr r = base("FxG", {f, g});
    for (i64 j = 1; j <= g; ++j) {
        r = luttinger(r, "Y1xA" + std::to_string(j), "l", -1);
        r = luttinger(r, "Y2xB" + std::to_string(j), "l", -1);
    }
    return r;
}

// Telescoping chain of building blocks, linked tail torus to head torus.
// Null when the decomposition carries no block at all.
RecipePtr chain_of(const Decomposition& dec) {
    std::vector<RecipePtr> blocks;
    i64 plain_b = dec.b;
    if (dec.g >= 1) {
        blocks.push_back(build_Bg_recipe(dec.g));
        plain_b -= 1;
    }
    for (i64 i = 0; i < plain_b; ++i) blocks.push_back(base("B"));
    for (i64 i = 0; i < dec.c; ++i) blocks.push_back(base("C"));
    for (i64 i = 0; i < dec.d; ++i) blocks.push_back(base("D"));
    if (blocks.empty()) return nullptr;

    RecipePtr acc = blocks.front();
    for (std::size_t i = 1; i < blocks.size(); ++i)
        acc = sum(acc, "T2", blocks[i], "T1", {});
    return acc;
}

// m_a is glued to l_b (with the given sign), l_a to m_b, meridian to meridian.
std::vector<GluingPair> cross_pairs(const ManifoldState& a, const std::string& ta,
                                    const ManifoldState& b, const std::string& tb,
                                    int first_sign) {
    const TorusMarker* x = a.find_torus(ta);
    const TorusMarker* y = b.find_torus(tb);
    if (!x || !y) throw Error("cross_pairs: marked torus missing");
    return {{x->m, y->l, first_sign}, {x->l, y->m, 1}, {x->mu, y->mu, 1}};
}

RecipePtr x13_core() {
    return luttinger(luttinger(base("B"), "T1", "l", 1), "T2", "m", 1);
}

// Seven surgeries on the eight marked tori of the rational-surface block;
// the eighth torus is kept for the gluing.
RecipePtr y_core() {
    static const char* const curves[7] = {"m", "l", "l", "m", "l", "m", "m"};
    RecipePtr y = base("Z");
    for (int i = 0; i < 7; ++i)
        y = luttinger(y, "S" + std::to_string(i + 1), curves[i], 1);
    return y;
}

RecipePtr x35_core() {
    RecipePtr bhat = luttinger(base("B"), "T2", "m", 1);
    RecipePtr y = y_core();
    auto pairs = cross_pairs(evaluate(*bhat), "T1", evaluate(*y), "S8", -1);
    return sum(bhat, "T1", y, "S8", std::move(pairs));
}

// Common tail of the signature minus-three construction: merge the two
// square-dual surfaces, trade the (+1) self-intersection away, then raise
// the genus by summing with a surgered product block.
RecipePtr sig3_tail(RecipePtr core, i64 g) {
    core = resolve(std::move(core), {"F", "H1"}, 1);
    core = blow_up(std::move(core), std::string("F+H1"));
    return sum(std::move(core), "F+H1", product_with_surgeries(3, g), "F", {});
}

// Finishing moves shared by the odd-c branches: the auxiliary piece is glued
// onto the chain tail, and the residual torus count k is spent on either a
// surgery or an elliptic-surface sum. A null chain attaches the piece along
// the elliptic fiber instead.
RecipePtr finish_odd(RecipePtr chain, const Decomposition& dec, RecipePtr piece,
                     const std::string& piece_torus, std::vector<GluingPair> pairs) {
    if (!chain)
        return sum(base("E", {dec.k}), "fiber", std::move(piece), piece_torus,
                   std::move(pairs));
    if (dec.k == 0) {
        RecipePtr r = luttinger(std::move(chain), "T1", "l", 1);
        return sum(std::move(r), "T2", std::move(piece), piece_torus, std::move(pairs));
    }
    RecipePtr r = sum(std::move(chain), "T2", std::move(piece), piece_torus,
                      std::move(pairs));
    return sum(std::move(r), "T1", base("E", {dec.k}), "fiber", {});
}

PlanResult odd_branch(i64 c, i64 chi, i64 drop_c, i64 drop_chi, RecipePtr piece,
                      const std::string& piece_torus, std::vector<GluingPair> pairs) {
    PlanResult res;
    res.status = PlanStatus::Realized;
    res.expected = char_from_c_chi(c, chi);
    Decomposition dec = arith_decompose((c - drop_c) / 2, chi - drop_chi);
    res.decomposition = dec;
    res.recipe = finish_odd(chain_of(dec), dec, std::move(piece), piece_torus,
                            std::move(pairs));
    return res;
}

} // namespace

PlanResult plan_even(i64 c, i64 chi) {
    if (c % 2 != 0 || !in_geography_cone(c, chi))
        throw Error("plan_even: need even c with 0 <= c <= 8 chi - 2");

    PlanResult res;
    res.status = PlanStatus::Realized;
    res.expected = char_from_c_chi(c, chi);
    Decomposition dec = arith_decompose(c / 2, chi);
    res.decomposition = dec;

    const i64 e_chain = 6 * dec.b + 4 * dec.g + 8 * dec.c + 10 * dec.d + 12 * dec.k;
    const i64 s_chain = -2 * dec.b - 4 * dec.c - 6 * dec.d - 8 * dec.k;
    if (e_chain != res.expected.e || s_chain != res.expected.sigma)
        throw Error("plan_even: chain arithmetic disagrees with (c, chi)");

    RecipePtr chain = chain_of(dec);
    if (!chain) {
        res.recipe = base("E'", {dec.k});
        return res;
    }
    if (dec.k == 0) {
        chain = luttinger(std::move(chain), "T1", "l", 1);
        chain = luttinger(std::move(chain), "T2", "m", 1);
    } else {
        chain = luttinger(std::move(chain), "T2", "m", 1);
        chain = sum(std::move(chain), "T1", base("E", {dec.k}), "fiber", {});
    }
    res.recipe = std::move(chain);
    return res;
}

PlanResult plan(i64 c, i64 chi) {
    PlanResult res;
    res.expected = char_from_c_chi(c, chi);

    if (!in_geography_cone(c, chi)) {
        res.status = PlanStatus::OutOfRegion;
        return res;
    }
    if (is_exception(c, chi)) {
        res.status = PlanStatus::Exception;
        return res;
    }
    if (c % 2 == 0) return plan_even(c, chi);

    if (const std::optional<Block> blk = sporadic_lookup(c, chi)) {
        res.status = PlanStatus::Sporadic;
        res.recipe = base(blk->name);
        return res;
    }

    if (c == 8 * chi - 3 && c >= 21) {
        res.status = PlanStatus::Realized;
        res.recipe = build_sig3_recipe(chi - 1);
        return res;
    }

    if (1 <= c && c <= 8 * chi - 17)
        return odd_branch(c, chi, 1, 2, base("S11"), "T", {});

    if (7 <= c && c <= 8 * chi - 11)
        return odd_branch(c, chi, 7, 2, base("X3_12"), "T", {});

    if (21 <= c && c <= 8 * chi - 5) {
        Decomposition dec = arith_decompose((c - 21) / 2, chi - 3);
        RecipePtr chain = chain_of(dec);
        if (!chain) throw Error("plan: deep odd branch lost its chain");
        RecipePtr p = build_P_recipe(2);
        auto pairs = cross_pairs(evaluate(*chain), "T2", evaluate(*p), "T2", 1);
        res.status = PlanStatus::Realized;
        res.decomposition = dec;
        res.recipe = finish_odd(std::move(chain), dec, std::move(p), "T2",
                                std::move(pairs));
        return res;
    }

    res.status = PlanStatus::Unplannable;
    return res;
}

CoverageReport scan(i64 chi_max, int jobs, i64 budget) {
    if (chi_max < 1) throw Error("scan: chi_max >= 1");

    std::vector<std::pair<i64, i64>> keys; // (chi, c), already sorted
    for (i64 chi = 1; chi <= chi_max; ++chi)
        for (i64 c = 0; c <= 8 * chi - 2; ++c) keys.emplace_back(chi, c);

    std::vector<CoverageRow> rows(keys.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= keys.size()) return;
            const auto [chi, c] = keys[i];
            CoverageRow row;
            row.c = c;
            row.chi = chi;
            PlanResult pr = plan(c, chi);
            row.status = pr.status;
            row.expected = pr.expected;
            if (pr.recipe) {
                ManifoldState st = evaluate(*pr.recipe);
                row.char_match = (st.ch == pr.expected);
                row.pi1 = certify(st, budget).status;
                row.recipe_id = recipe_id(*pr.recipe);
            }
            rows[i] = std::move(row);
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    CoverageReport rep;
    rep.rows = std::move(rows);
    for (const CoverageRow& row : rep.rows) {
        switch (row.status) {
        case PlanStatus::Realized: ++rep.realized; break;
        case PlanStatus::Sporadic: ++rep.sporadic; break;
        case PlanStatus::Exception:
            ++rep.exception;
            rep.exceptions.emplace_back(row.c, row.chi);
            break;
        case PlanStatus::Unplannable: ++rep.unplannable; break;
        case PlanStatus::OutOfRegion: break;
        }
    }
    return rep;
}

RecipePtr build_sig3_recipe(i64 k) {
    if (k < 2) throw Error("build_sig3_recipe: k >= 2");
    const bool even = (k % 2 == 0);
    return sig3_tail(even ? x13_core() : x35_core(), even ? k / 2 : (k - 1) / 2);
}

RecipePtr build_P_recipe(i64 k) {
    if (k < 2) throw Error("build_P_recipe: k >= 2");
    const bool even = (k % 2 == 0);
    RecipePtr core;
    if (even) {
        core = luttinger(base("B"), "T1", "l", 1);
    } else {
        RecipePtr b = base("B");
        RecipePtr y = y_core();
        auto pairs = cross_pairs(evaluate(*b), "T1", evaluate(*y), "S8", -1);
        core = sum(std::move(b), "T1", std::move(y), "S8", std::move(pairs));
    }
    return sig3_tail(std::move(core), even ? k / 2 : (k - 1) / 2);
}

Block plan_P_block(i64 k) {
    RecipePtr r = build_P_recipe(k);
    ManifoldState st = evaluate(*r);

    Block blk;
    blk.name = "P(" + std::to_string(k) + ")";
    blk.ch = st.ch;
    blk.has_presentation = st.has_presentation;
    blk.complement = st.pres;
    blk.ambient = st.ambient;
    blk.tori = st.tori;
    blk.surfaces = st.surfaces;
    blk.asserted_simply_connected = false;
    blk.asserted_minimal = true;
    for (const std::string& note : st.minimality_chain) {
        if (!blk.minimality_note.empty()) blk.minimality_note += "; ";
        blk.minimality_note += note;
    }
    blk.odd_intersection_form = st.sticky_odd;
    blk.citation = "infinite-cyclic companion of the signature minus-three family";
    return blk;
}

RecipePtr build_Bg_recipe(i64 g) {
    if (g < 0) throw Error("build_Bg_recipe: g >= 0");
    if (g == 0) return base("B");
    return sum(base("B"), "F", product_with_surgeries(2, g), "F", {});
}

RecipePtr build_S_recipe() {
    RecipePtr r = luttinger(base("B"), "T1", "l", 1);
    RecipePtr q = sum(std::move(r), "T2", base("Xtilde35"), "T3", {});

    std::vector<std::string> comps(8, "F");
    comps.push_back("G");
    RecipePtr merged = resolve(std::move(q), comps, 8);
    for (int i = 0; i < 16; ++i) merged = blow_up(std::move(merged), std::string("8F+G"));

    RecipePtr h = blow_up(base("H_lefschetz"), std::string("Sigma"));
    return sum(std::move(merged), "8F+G", std::move(h), "Sigma", {});
}

RecipePtr wedge_extend(RecipePtr base_recipe, const std::string& torus, i64 c, i64 chi) {
    if (!base_recipe) throw Error("wedge_extend: null base");

    RecipePtr z1;
    std::string attach;
    if (c % 2 == 0) {
        if (c < 0 || c > 8 * chi - 2)
            throw Error("wedge_extend: even c needs 0 <= c <= 8 chi - 2");
        Decomposition dec = arith_decompose(c / 2, chi);
        RecipePtr chain = chain_of(dec);
        if (!chain) {
            z1 = base("E", {dec.k});
            attach = "fiber";
        } else {
            if (dec.k == 0) {
                chain = luttinger(std::move(chain), "T1", "l", 1);
            } else {
                chain = sum(std::move(chain), "T1", base("E", {dec.k}), "fiber", {});
            }
            z1 = std::move(chain);
            attach = "T2";
        }
    } else {
        if (c < 1 || c > 8 * chi - 7)
            throw Error("wedge_extend: odd c needs 1 <= c <= 8 chi - 7");
        if (c == 1 && chi == 2) {
            z1 = base("S11");
            attach = "T";
        } else if (c >= 5) {
            RecipePtr acc = base("A");
            Decomposition dec = arith_decompose((c - 5) / 2, chi - 1);
            if (RecipePtr chain = chain_of(dec))
                acc = sum(std::move(acc), "T2", std::move(chain), "T1", {});
            if (dec.k == 0)
                acc = luttinger(std::move(acc), "T1", "l", 1);
            else
                acc = sum(std::move(acc), "T1", base("E", {dec.k}), "fiber", {});
            z1 = std::move(acc);
            attach = "T2";
        } else {
            throw Error("wedge_extend: odd c in {1, 3} only has the (1, 2) piece");
        }
    }
    return sum(std::move(z1), attach, std::move(base_recipe), torus, {});
}

RecipePtr plan_signature_zero(i64 k) {
    if (k < 45) throw Error("plan_signature_zero: k >= 45");
    const i64 chi = k - 44;
    return wedge_extend(build_S_recipe(), "T4", 8 * chi - 4, chi);
}

RecipePtr plan_signature_minus_one(i64 k) {
    if (k < 49) throw Error("plan_signature_minus_one: k >= 49");
    RecipePtr b = base("B");
    RecipePtr p = build_P_recipe(k - 47);
    auto pairs = cross_pairs(evaluate(*b), "T1", evaluate(*p), "T2", 1);
    RecipePtr y = sum(std::move(b), "T1", std::move(p), "T2", std::move(pairs));
    return sum(std::move(y), "T2", build_S_recipe(), "T4", {});
}

} // namespace symgeo
