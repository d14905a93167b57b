#include "symgeo/eliminate.hpp"

#include <algorithm>
#include <set>

namespace symgeo {

std::string to_string(TrivialityStatus s) {
    switch (s) {
    case TrivialityStatus::ProvedTrivial: return "proved-trivial";
    case TrivialityStatus::ProvedAbelianizationNontrivial:
        return "proved-abelianization-nontrivial";
    case TrivialityStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

using CommSet = std::set<std::pair<std::string, std::string>>;

// A cyclically reduced relator of the shape g^a h^b g^-a h^-b (|a|=|b|=1)
// asserts that g and h commute, whatever the sign pattern.
std::optional<std::pair<std::string, std::string>> commutation_pair(const Word& r) {
    const auto& ls = r.letters();
    if (ls.size() != 4) return std::nullopt;
    for (const auto& l : ls)
        if (l.exp != 1 && l.exp != -1) return std::nullopt;
    if (ls[0].gen != ls[2].gen || ls[1].gen != ls[3].gen) return std::nullopt;
    if (ls[0].gen == ls[1].gen) return std::nullopt;
    if (ls[0].exp != -ls[2].exp || ls[1].exp != -ls[3].exp) return std::nullopt;
    auto p = std::minmax(ls[0].gen, ls[1].gen);
    return std::make_pair(p.first, p.second);
}

bool commutes(const CommSet& comm, const std::string& a, const std::string& b) {
    auto p = std::minmax(a, b);
    return comm.count({p.first, p.second}) > 0;
}

// Normal form modulo the known commutations: adjacent syllables in distinct
// commuting generators are swapped toward name order, free-reducing after
// every swap. Terminates because (length, inversion count) drops strictly.
Word comm_reduce(Word w, const CommSet& comm) {
    bool changed = true;
    while (changed) {
        changed = false;
        const auto& ls = w.letters();
        for (size_t i = 0; i + 1 < ls.size(); ++i) {
            const Letter& u = ls[i];
            const Letter& v = ls[i + 1];
            if (u.gen == v.gen) continue;
            if (v.gen < u.gen && commutes(comm, u.gen, v.gen)) {
                std::vector<Letter> next(ls.begin(), ls.end());
                std::swap(next[i], next[i + 1]);
                w = free_reduce(next);
                changed = true;
                break;
            }
        }
    }
    return w;
}

struct WorkSet {
    std::vector<std::string> gens;
    std::vector<Word> rels;
    CommSet comm; // monotone: learned pairs survive relator simplification

    void learn() {
        for (const auto& r : rels)
            if (auto p = commutation_pair(r)) comm.insert(*p);
    }

    void normalize() {
        for (int pass = 0; pass < 64; ++pass) {
            learn();
            bool changed = false;
            std::vector<Word> out;
            for (const auto& r : rels) {
                Word red = comm_reduce(r.cyclically_reduced(), comm).cyclically_reduced();
                if (red != r) changed = true;
                if (red.empty()) continue;
                bool dup = false;
                for (const auto& o : out)
                    if (same_cyclic(o, red)) {
                        dup = true;
                        break;
                    }
                if (!dup) out.push_back(red);
            }
            if (out.size() != rels.size()) changed = true;
            rels = std::move(out);
            if (!changed) break;
        }
        sort_canonical();
    }

    void sort_canonical() {
        std::stable_sort(rels.begin(), rels.end(), [](const Word& a, const Word& b) {
            if (a.length() != b.length()) return a.length() < b.length();
            return a < b;
        });
    }

    static bool same_cyclic(const Word& a, const Word& b) {
        if (a.length() != b.length()) return false;
        for (const Word& r : a.rotations())
            if (r == b) return true;
        for (const Word& r : a.inverse().rotations())
            if (r == b) return true;
        return false;
    }

    void substitute(const std::string& g, const Word& image) {
        for (auto& r : rels) r = r.substituted(g, image);
        gens.erase(std::find(gens.begin(), gens.end(), g));
        normalize();
    }
};

// Looks for a rotation of r of the form g^{+-1} * w where g occurs in no
// other syllable; returns the substitution image for g.
std::optional<EliminationStep> find_elimination(const Word& r) {
    const auto& ls = r.letters();
    for (size_t i = 0; i < ls.size(); ++i) {
        const Letter& l = ls[i];
        if (l.exp != 1 && l.exp != -1) continue;
        bool unique = true;
        for (size_t j = 0; j < ls.size(); ++j)
            if (j != i && ls[j].gen == l.gen) {
                unique = false;
                break;
            }
        if (!unique) continue;
        // rotate so l is at the front; the image is rest^-1 (exp +1) or rest
        Word rest;
        for (size_t j = 1; j < ls.size(); ++j) rest.push(ls[(i + j) % ls.size()]);
        return EliminationStep{l.gen, l.exp == 1 ? rest.inverse() : rest};
    }
    return std::nullopt;
}

} // namespace

TrivialityCertificate eliminate_to_trivial(const Presentation& p, i64 budget) {
    TrivialityCertificate cert;
    cert.abelianization = p.abelianization();

    WorkSet ws;
    ws.gens = p.generators();
    ws.rels = p.relators();
    ws.normalize();

    while (!ws.gens.empty() && cert.steps_used < budget) {
        std::optional<EliminationStep> step;
        for (const auto& r : ws.rels) {
            step = find_elimination(r);
            if (step) break;
        }
        if (!step) break;
        ws.substitute(step->gen, step->image);
        cert.order.push_back(*step);
        ++cert.steps_used;
    }

    cert.remaining_generators = ws.gens;
    cert.remaining_relators = ws.rels;
    if (ws.gens.empty()) {
        cert.status = TrivialityStatus::ProvedTrivial;
        if (!cert.abelianization.is_trivial())
            throw Error("internal inconsistency: eliminated all generators but H1 = nontrivial");
    } else if (!cert.abelianization.is_trivial()) {
        cert.status = TrivialityStatus::ProvedAbelianizationNontrivial;
    } else {
        cert.status = TrivialityStatus::Inconclusive;
    }
    return cert;
}

bool replay_certificate(const Presentation& p, const TrivialityCertificate& cert) {
    WorkSet ws;
    ws.gens = p.generators();
    ws.rels = p.relators();
    ws.normalize();

    for (const auto& step : cert.order) {
        if (std::find(ws.gens.begin(), ws.gens.end(), step.gen) == ws.gens.end()) return false;
        if (step.image.mentions(step.gen)) return false;
        // some current relator must justify gen = image
        bool justified = false;
        for (const auto& r : ws.rels) {
            for (const Word& rot : r.rotations()) {
                const auto& ls = rot.letters();
                if (ls.empty() || ls.front().gen != step.gen) continue;
                if (ls.front().exp != 1 && ls.front().exp != -1) continue;
                Word rest;
                for (size_t j = 1; j < ls.size(); ++j) rest.push(ls[j]);
                if (rest.mentions(step.gen)) continue;
                Word image = ls.front().exp == 1 ? rest.inverse() : rest;
                if (image == step.image) {
                    justified = true;
                    break;
                }
            }
            if (justified) break;
        }
        if (!justified) return false;
        ws.substitute(step.gen, step.image);
    }
    if (cert.status == TrivialityStatus::ProvedTrivial) {
        if (!ws.gens.empty()) return false;
        if (!p.abelianization().is_trivial()) return false;
    }
    return true;
}

} // namespace symgeo
