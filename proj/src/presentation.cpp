#include "symgeo/presentation.hpp"

#include <algorithm>
#include <set>

namespace symgeo {

namespace {

// Canonical representative of a relator as a cyclic word up to inversion:
// the least rotation of the word or its inverse.
Word cyclic_canonical(const Word& w) {
    Word red = w.cyclically_reduced();
    if (red.empty()) return red;
    Word best = red;
    for (const Word& r : red.rotations())
        if (r < best) best = r;
    for (const Word& r : red.inverse().rotations())
        if (r < best) best = r;
    return best;
}

} // namespace

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators) {
    for (auto& g : generators) add_generator(g);
    add_relators(relators);
}

bool Presentation::has_generator(const std::string& g) const {
    return std::find(gens_.begin(), gens_.end(), g) != gens_.end();
}

void Presentation::add_generator(const std::string& g) {
    if (has_generator(g)) throw Error("duplicate generator: " + g);
    gens_.push_back(g);
}

void Presentation::add_relator(const Word& w) {
    for (const auto& l : w.letters())
        if (!has_generator(l.gen))
            throw Error("relator " + w.str() + " mentions unknown generator " + l.gen);
    Word canon = cyclic_canonical(w);
    if (canon.empty()) return;
    for (const auto& r : rels_)
        if (r == canon) return;
    rels_.push_back(canon);
}

void Presentation::add_relators(const std::vector<Word>& ws) {
    for (const auto& w : ws) add_relator(w);
}

Presentation Presentation::renamed(const std::map<std::string, std::string>& rename) const {
    Presentation out;
    for (const auto& g : gens_) {
        auto it = rename.find(g);
        out.add_generator(it == rename.end() ? g : it->second);
    }
    for (const auto& r : rels_) out.add_relator(r.renamed(rename));
    return out;
}

IntMatrix Presentation::exponent_matrix() const {
    IntMatrix m(rels_.size(), gens_.size());
    for (size_t r = 0; r < rels_.size(); ++r)
        for (size_t c = 0; c < gens_.size(); ++c) m.at(r, c) = rels_[r].exponent_sum(gens_[c]);
    return m;
}

AbelianInvariants Presentation::abelianization() const {
    if (gens_.empty()) return AbelianInvariants{};
    if (rels_.empty()) return AbelianInvariants{static_cast<i64>(gens_.size()), {}};
    return abelian_invariants(exponent_matrix());
}

std::string Presentation::str() const {
    std::string s = "< ";
    for (size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i];
    s += " | ";
    for (size_t i = 0; i < rels_.size(); ++i) s += (i ? ", " : "") + rels_[i].str();
    s += " >";
    return s;
}

AmalgamationResult amalgamate(const Presentation& left, const Presentation& right,
                              const std::vector<Identification>& ids) {
    AmalgamationResult res;
    std::vector<std::string> taken = left.generators();
    for (const auto& g : right.generators()) {
        if (std::find(taken.begin(), taken.end(), g) != taken.end()) {
            std::string fresh = fresh_name(g, taken);
            res.rename_right[g] = fresh;
            taken.push_back(fresh);
        } else {
            taken.push_back(g);
        }
    }
    Presentation r2 = right.renamed(res.rename_right);

    Presentation& p = res.presentation;
    for (const auto& g : left.generators()) p.add_generator(g);
    for (const auto& g : r2.generators()) p.add_generator(g);
    for (const auto& w : left.relators()) p.add_relator(w);
    for (const auto& w : r2.relators()) p.add_relator(w);
    for (const auto& id : ids) {
        Word rhs = id.right.renamed(res.rename_right);
        Word rel = id.sign >= 0 ? id.left * rhs.inverse() : id.left * rhs;
        p.add_relator(rel);
    }
    return res;
}

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
    auto used = [&](const std::string& s) {
        return std::find(taken.begin(), taken.end(), s) != taken.end();
    };
    if (!used(base)) return base;
    for (int i = 2;; ++i) {
        std::string cand = base + "_" + std::to_string(i);
        if (!used(cand)) return cand;
    }
}

} // namespace symgeo
