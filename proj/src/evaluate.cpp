#include "symgeo/evaluate.hpp"

#include <algorithm>
#include <map>

namespace symgeo {

std::string to_string(Pi1Status s) {
    switch (s) {
    case Pi1Status::ProvedTrivial: return "proved-trivial";
    case Pi1Status::AssertedTrivial: return "asserted-trivial";
    case Pi1Status::AbelianizationNontrivial: return "abelianization-nontrivial";
    case Pi1Status::Inconclusive: return "inconclusive";
    case Pi1Status::Unknown: return "unknown";
    }
    return "?";
}

const TorusMarker* ManifoldState::find_torus(const std::string& name) const {
    for (const auto& t : tori)
        if (t.name == name) return &t;
    return nullptr;
}

const SurfaceMarker* ManifoldState::find_surface(const std::string& name) const {
    for (const auto& s : surfaces)
        if (s.name == name) return &s;
    return nullptr;
}

Presentation ManifoldState::certification_presentation() const {
    Presentation p = pres;
    for (const auto& r : ambient)
        if (r.blockers.empty()) p.add_relator(r.w);
    return p;
}

bool ManifoldState::odd_form_witness() const {
    if (sticky_odd) return true;
    if (ch.sigma % 2 != 0) return true;
    for (const auto& s : surfaces)
        if (s.square % 2 != 0) return true;
    return false;
}

ManifoldState state_from_block(const Block& b) {
    ManifoldState s;
    s.ch = b.ch;
    s.has_presentation = b.has_presentation;
    s.pres = b.complement;
    s.ambient = b.ambient;
    s.tori = b.tori;
    s.surfaces = b.surfaces;
    s.asserted_pi1_trivial = b.asserted_simply_connected;
    s.sticky_odd = b.odd_intersection_form;
    if (b.asserted_minimal)
        s.minimality_chain.push_back(b.minimality_note.empty() ? b.name + " minimal"
                                                               : b.minimality_note);
    return s;
}

namespace {

// Uniform view of the marker a sum consumes: tori are genus-1 square-0.
struct MarkerRef {
    bool is_torus = false;
    TorusMarker t;
    SurfaceMarker s;

    i64 genus() const { return is_torus ? 1 : s.genus; }
    i64 square() const { return is_torus ? 0 : s.square; }
    const std::string& name() const { return is_torus ? t.name : s.name; }

    // The marker's meridian is known to die in its own complement.
    bool meridian_dead() const {
        if (is_torus) return t.complement_simply_connected || (t.has_words && t.mu.empty());
        // pi1_surjects encodes a complement-inclusion isomorphism, which
        // forces the meridian to vanish there.
        return s.meridian_trivial || s.complement_simply_connected || s.pi1_surjects;
    }

    bool csc() const {
        return is_torus ? t.complement_simply_connected : s.complement_simply_connected;
    }

    // Boundary curve words on this side, push-offs first. Empty when the
    // marker carries no word data.
    std::vector<Word> curve_words() const {
        if (is_torus) return t.has_words ? std::vector<Word>{t.m, t.l} : std::vector<Word>{};
        return s.has_images ? s.images : std::vector<Word>{};
    }
};

MarkerRef take_marker(const ManifoldState& st, const std::string& name) {
    if (const TorusMarker* t = st.find_torus(name)) {
        MarkerRef m;
        m.is_torus = true;
        m.t = *t;
        return m;
    }
    if (const SurfaceMarker* s = st.find_surface(name)) {
        MarkerRef m;
        m.s = *s;
        return m;
    }
    throw Error("sum: no unconsumed marker named " + name);
}

void scrub_blocker(std::vector<AmbientRelator>& ambient, const std::string& name) {
    for (auto& r : ambient)
        r.blockers.erase(std::remove(r.blockers.begin(), r.blockers.end(), name),
                         r.blockers.end());
}

// Side survivors after consuming `used`: surfaces geometrically dual to the
// consumed marker are cut open by the sum and do not survive.
struct Survivors {
    std::vector<TorusMarker> tori;
    std::vector<SurfaceMarker> surfaces;
    std::vector<AmbientRelator> ambient;
};

Survivors survivors_of(const ManifoldState& st, const std::string& used) {
    Survivors out;
    for (const auto& t : st.tori)
        if (t.name != used) out.tori.push_back(t);
    for (const auto& s : st.surfaces)
        if (s.name != used && s.dual_to != used) out.surfaces.push_back(s);
    out.ambient = st.ambient;
    return out;
}

void rename_words(Survivors& sv, const std::map<std::string, std::string>& rename) {
    if (rename.empty()) return;
    for (auto& t : sv.tori)
        if (t.has_words) {
            t.mu = t.mu.renamed(rename);
            t.m = t.m.renamed(rename);
            t.l = t.l.renamed(rename);
        }
    for (auto& s : sv.surfaces)
        if (s.has_images)
            for (auto& w : s.images) w = w.renamed(rename);
    for (auto& r : sv.ambient) r.w = r.w.renamed(rename);
}

// Merges right survivors into left, renaming right marker names that collide
// and keeping dual_to / blocker references consistent.
void merge_survivors(ManifoldState& out, Survivors left, Survivors right) {
    std::vector<std::string> taken;
    for (const auto& t : left.tori) taken.push_back(t.name);
    for (const auto& s : left.surfaces) taken.push_back(s.name);

    std::map<std::string, std::string> marker_rename;
    auto claim = [&](const std::string& name) {
        std::string fresh = name;
        if (std::find(taken.begin(), taken.end(), name) != taken.end()) {
            fresh = fresh_name(name, taken);
            marker_rename[name] = fresh;
        }
        taken.push_back(fresh);
        return fresh;
    };
    for (auto& t : right.tori) t.name = claim(t.name);
    for (auto& s : right.surfaces) s.name = claim(s.name);
    for (auto& s : right.surfaces) {
        auto it = marker_rename.find(s.dual_to);
        if (it != marker_rename.end()) s.dual_to = it->second;
    }
    for (auto& r : right.ambient)
        for (auto& b : r.blockers) {
            auto it = marker_rename.find(b);
            if (it != marker_rename.end()) b = it->second;
        }

    out.tori = std::move(left.tori);
    out.tori.insert(out.tori.end(), right.tori.begin(), right.tori.end());
    out.surfaces = std::move(left.surfaces);
    out.surfaces.insert(out.surfaces.end(), right.surfaces.begin(), right.surfaces.end());
    out.ambient = std::move(left.ambient);
    out.ambient.insert(out.ambient.end(), right.ambient.begin(), right.ambient.end());
}

void drop_presentation(ManifoldState& out) {
    out.has_presentation = false;
    out.pres = Presentation();
    out.ambient.clear();
    out.pres_may_add_relations = false;
    out.pres_may_lack_relations = false;
    for (auto& t : out.tori) {
        t.has_words = false;
        t.mu = t.m = t.l = Word();
    }
    for (auto& s : out.surfaces) {
        s.has_images = false;
        s.images.clear();
    }
}

} // namespace

ManifoldState apply_sum(const ManifoldState& a, const std::string& fa,
                        const ManifoldState& b, const std::string& fb,
                        const std::vector<GluingPair>& gluing) {
    MarkerRef ma = take_marker(a, fa);
    MarkerRef mb = take_marker(b, fb);
    if (ma.genus() != mb.genus())
        throw Error("sum: genus mismatch along " + fa + " (" + std::to_string(ma.genus()) +
                    ") and " + fb + " (" + std::to_string(mb.genus()) + ")");
    if (ma.square() + mb.square() != 0)
        throw Error("sum: squares along " + fa + " and " + fb + " must cancel, got " +
                    std::to_string(ma.square()) + " + " + std::to_string(mb.square()));
    const i64 g = ma.genus();

    ManifoldState out;
    out.ch = closed_char(a.ch.e + b.ch.e + 4 * g - 4, a.ch.sigma + b.ch.sigma);
    out.sticky_odd = a.sticky_odd || b.sticky_odd;
    out.minimality_chain = a.minimality_chain;
    out.minimality_chain.insert(out.minimality_chain.end(), b.minimality_chain.begin(),
                                b.minimality_chain.end());
    if (g >= 1)
        out.minimality_chain.push_back("fiber sum along genus-" + std::to_string(g) +
                                       " surfaces of relatively minimal pieces is minimal "
                                       "(Usher)");
    out.pres_may_add_relations = a.pres_may_add_relations || b.pres_may_add_relations;
    out.pres_may_lack_relations = a.pres_may_lack_relations || b.pres_may_lack_relations;

    Survivors sa = survivors_of(a, fa);
    Survivors sb = survivors_of(b, fb);
    // Consumed tori leave their ambient blockers in place unless the gluing
    // kills their meridian (the partner's meridian already dies).
    if (ma.is_torus && mb.meridian_dead()) scrub_blocker(sa.ambient, fa);
    if (mb.is_torus && ma.meridian_dead()) scrub_blocker(sb.ambient, fb);

    const bool pa = a.has_presentation, pb = b.has_presentation;

    if (pa && pb) {
        std::vector<Identification> ids;
        bool lack = false, add = false;
        if (!gluing.empty()) {
            for (const auto& p : gluing) ids.push_back(Identification{p.a, p.b, p.sign});
        } else if (ma.is_torus && mb.is_torus && ma.t.has_words && mb.t.has_words) {
            ids = {Identification{ma.t.m, mb.t.m, 1}, Identification{ma.t.l, mb.t.l, 1},
                   Identification{ma.t.mu, mb.t.mu, 1}};
        } else {
            std::vector<Word> wa = ma.curve_words(), wb = mb.curve_words();
            if (!wa.empty() && wa.size() == wb.size()) {
                for (size_t i = 0; i < wa.size(); ++i)
                    ids.push_back(Identification{wa[i], wb[i], 1});
            } else {
                lack = true; // boundary identifications not expressible in words
            }
            // The meridian pair is only written down when one side spells its
            // meridian; without a dead meridian on either side the carried
            // closed-side relators may be too strong.
            if (ma.is_torus && ma.t.has_words && mb.meridian_dead())
                ids.push_back(Identification{ma.t.mu, Word(), 1});
            else if (mb.is_torus && mb.t.has_words && ma.meridian_dead())
                ids.push_back(Identification{Word(), mb.t.mu, 1});
            else if (!ma.meridian_dead() && !mb.meridian_dead())
                add = true;
        }

        AmalgamationResult am = amalgamate(a.pres, b.pres, ids);
        out.has_presentation = true;
        out.pres = am.presentation;
        rename_words(sb, am.rename_right);
        merge_survivors(out, std::move(sa), std::move(sb));
        out.pres_may_add_relations = out.pres_may_add_relations || add;
        out.pres_may_lack_relations = out.pres_may_lack_relations || lack;
        return out;
    }

    if (pa != pb) {
        const ManifoldState& kept = pa ? a : b;
        const ManifoldState& axiom = pa ? b : a;
        const MarkerRef& mk = pa ? ma : mb;
        const MarkerRef& mx = pa ? mb : ma;

        merge_survivors(out, std::move(sa), std::move(sb));

        if (axiom.asserted_pi1_trivial && mx.csc()) {
            // The axiom side's complement is simply connected: the shared
            // boundary dies, so the kept side's curves are killed.
            std::vector<Word> kills = mk.curve_words();
            if (mk.is_torus && mk.t.has_words) kills.push_back(mk.t.mu);
            if (kills.empty()) {
                drop_presentation(out);
                return out;
            }
            out.has_presentation = true;
            out.pres = kept.pres;
            out.pres_may_add_relations = kept.pres_may_add_relations;
            out.pres_may_lack_relations = kept.pres_may_lack_relations;
            for (const auto& w : kills) out.pres.add_relator(w);
            return out;
        }

        if (!mx.is_torus && mx.s.pi1_surjects) {
            // The surface carries the axiom side's whole group and its
            // complement inclusion is an isomorphism; if the kept side is
            // certified trivial, every image dies and the surjection kills
            // the axiom side too.
            Pi1Report kept_pi1 = certify(kept);
            if (kept_pi1.status == Pi1Status::ProvedTrivial) {
                drop_presentation(out);
                out.asserted_pi1_trivial = true;
                return out;
            }
        }

        drop_presentation(out);
        return out;
    }

    // Neither side carries words: only quoted facts can survive.
    merge_survivors(out, std::move(sa), std::move(sb));
    drop_presentation(out);
    out.asserted_pi1_trivial =
        a.asserted_pi1_trivial && b.asserted_pi1_trivial && ma.csc() && mb.csc();
    return out;
}

ManifoldState apply_luttinger(const ManifoldState& x, const std::string& torus,
                              const std::string& curve, int sign) {
    const TorusMarker* tp = x.find_torus(torus);
    if (!tp) throw Error("luttinger: no unconsumed torus named " + torus);
    if (!x.has_presentation || !tp->has_words)
        throw Error("luttinger: torus " + torus +
                    " carries no push-off words; surgery needs a presentation");
    if (curve != "m" && curve != "l") throw Error("luttinger: curve must be \"m\" or \"l\"");
    if (sign != 1 && sign != -1) throw Error("luttinger: sign must be +1 or -1");

    const TorusMarker t = *tp;
    ManifoldState out = x;
    const Word c = curve == "m" ? t.m : t.l;
    out.pres.add_relator(t.mu * (sign == 1 ? c : c.inverse()));

    out.tori.erase(std::remove_if(out.tori.begin(), out.tori.end(),
                                  [&](const TorusMarker& u) { return u.name == torus; }),
                   out.tori.end());
    // Filling the surgered torus kills mu * c^sign; the plain meridian is
    // known to die only when one factor vanishes on its own.
    if (t.mu.empty() || c.empty()) scrub_blocker(out.ambient, torus);

    if (t.origin == "B" || t.origin == "C" || t.origin == "D")
        out.minimality_chain.push_back("+-1 torus surgery on " + torus + " in " + t.origin +
                                       " preserves minimality");
    return out;
}

ManifoldState apply_blow_up(const ManifoldState& x, const std::optional<std::string>& at) {
    ManifoldState out = x;
    out.ch = closed_char(x.ch.e + 1, x.ch.sigma - 1);
    if (at) {
        bool found = false;
        for (auto& s : out.surfaces)
            if (s.name == *at) {
                s.square -= 1;
                s.meridian_trivial = true; // punctured exceptional sphere bounds it
                found = true;
                break;
            }
        if (!found) throw Error("blow_up: no surface named " + *at);
        out.minimality_chain.push_back("blow-up at " + *at +
                                       ": exceptional sphere meets the proper transform");
    } else {
        out.sticky_odd = true;
        out.minimality_chain.push_back("blow-up: adds a disjoint exceptional sphere");
    }
    return out;
}

ManifoldState apply_resolve(const ManifoldState& x, const std::vector<std::string>& components,
                            i64 intersections) {
    if (components.empty()) throw Error("resolve: needs at least one component");
    const i64 count = static_cast<i64>(components.size());
    if (intersections < count - 1)
        throw Error("resolve: " + std::to_string(count) + " components with " +
                    std::to_string(intersections) + " intersections cannot be connected");

    // distinct names with multiplicities, first-occurrence order
    std::vector<std::pair<std::string, i64>> grouped;
    for (const auto& name : components) {
        auto it = std::find_if(grouped.begin(), grouped.end(),
                               [&](const auto& p) { return p.first == name; });
        if (it == grouped.end())
            grouped.emplace_back(name, 1);
        else
            ++it->second;
    }

    ManifoldState out = x;
    SurfaceMarker merged;
    merged.genus = intersections - (count - 1);
    merged.square = 2 * intersections;
    merged.meridian_trivial = true;
    merged.complement_simply_connected = true;
    bool all_images = true;
    std::string name;
    for (const auto& [comp, mult] : grouped) {
        const SurfaceMarker* s = x.find_surface(comp);
        if (!s) throw Error("resolve: no surface named " + comp);
        if (mult > 1 && s->square != 0)
            throw Error("resolve: repeated component " + comp + " must have square 0");
        merged.genus += mult * s->genus;
        merged.square += mult * s->square;
        merged.meridian_trivial = merged.meridian_trivial && s->meridian_trivial;
        merged.complement_simply_connected =
            merged.complement_simply_connected && s->complement_simply_connected;
        merged.pi1_surjects = merged.pi1_surjects || s->pi1_surjects;
        all_images = all_images && s->has_images;
        if (merged.origin.empty()) merged.origin = s->origin;
        if (!name.empty()) name += "+";
        if (mult > 1) name += std::to_string(mult);
        name += comp;
    }
    merged.name = name;

    // Generator images survive only for a tree of components whose images
    // are all stated: the extra handles of a non-tree configuration carry
    // generators with no stated image.
    if (all_images && intersections == count - 1)
        for (const auto& comp : components) {
            const SurfaceMarker* s = x.find_surface(comp);
            merged.images.insert(merged.images.end(), s->images.begin(), s->images.end());
        }
    merged.has_images = !merged.images.empty();

    out.surfaces.erase(std::remove_if(out.surfaces.begin(), out.surfaces.end(),
                                      [&](const SurfaceMarker& s) {
                                          return std::find_if(grouped.begin(), grouped.end(),
                                                              [&](const auto& p) {
                                                                  return p.first == s.name;
                                                              }) != grouped.end();
                                      }),
                       out.surfaces.end());
    for (auto& s : out.surfaces)
        if (std::find_if(grouped.begin(), grouped.end(),
                         [&](const auto& p) { return p.first == s.dual_to; }) != grouped.end())
            s.dual_to = merged.name;
    out.surfaces.push_back(std::move(merged));
    return out;
}

ManifoldState evaluate(const Recipe& r) {
    switch (r.op) {
    case Op::Base: return state_from_block(catalog(r.block, r.params));
    case Op::Sum:
        return apply_sum(evaluate(*r.left), r.left_surface, evaluate(*r.right),
                         r.right_surface, r.gluing);
    case Op::Luttinger: return apply_luttinger(evaluate(*r.child), r.torus, r.curve, r.sign);
    case Op::BlowUp: return apply_blow_up(evaluate(*r.child), r.at);
    case Op::Resolve: return apply_resolve(evaluate(*r.child), r.components, r.intersections);
    }
    throw Error("evaluate: unknown op");
}

Pi1Report certify(const ManifoldState& s, i64 budget) {
    Pi1Report rep;
    if (!s.has_presentation) {
        rep.status = s.asserted_pi1_trivial ? Pi1Status::AssertedTrivial : Pi1Status::Unknown;
        return rep;
    }
    TrivialityCertificate cert = eliminate_to_trivial(s.certification_presentation(), budget);
    switch (cert.status) {
    case TrivialityStatus::ProvedTrivial:
        rep.status = s.pres_may_add_relations ? Pi1Status::Inconclusive
                                              : Pi1Status::ProvedTrivial;
        break;
    case TrivialityStatus::ProvedAbelianizationNontrivial:
        rep.status = s.pres_may_lack_relations ? Pi1Status::Inconclusive
                                               : Pi1Status::AbelianizationNontrivial;
        break;
    case TrivialityStatus::Inconclusive: rep.status = Pi1Status::Inconclusive; break;
    }
    rep.certificate = std::move(cert);
    return rep;
}

} // namespace symgeo
