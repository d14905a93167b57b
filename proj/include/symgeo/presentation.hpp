#pragma once

#include "symgeo/snf.hpp"
#include "symgeo/word.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symgeo {

// A finite presentation. Generators keep their declaration order; relators
// are stored freely and cyclically reduced, deduplicated up to rotation and
// inversion, in insertion order.
class Presentation {
public:
    Presentation() = default;
    Presentation(std::vector<std::string> generators, std::vector<Word> relators);

    const std::vector<std::string>& generators() const { return gens_; }
    const std::vector<Word>& relators() const { return rels_; }

    bool has_generator(const std::string& g) const;
    void add_generator(const std::string& g);

    // Throws if a relator mentions an unknown generator. Trivial relators are
    // dropped, duplicates (up to rotation/inversion) kept once.
    void add_relator(const Word& w);
    void add_relators(const std::vector<Word>& ws);

    Presentation renamed(const std::map<std::string, std::string>& rename) const;

    AbelianInvariants abelianization() const;
    IntMatrix exponent_matrix() const;

    std::string str() const;

private:
    std::vector<std::string> gens_;
    std::vector<Word> rels_;
};

struct AmalgamationResult {
    Presentation presentation;
    // Renaming applied to the right-hand factor's generators to keep the
    // union disjoint. Identity entries are omitted.
    std::map<std::string, std::string> rename_right;
};

// One identification relator w_left * w_right^-sign is added per pair.
struct Identification {
    Word left;
    Word right;
    int sign = 1; // +1: left = right, -1: left = right^-1
};

// Free product of the factors modulo the identifications (Seifert-Van Kampen
// for a gluing along a shared subspace). Right-hand generators are renamed
// wherever they collide with left-hand ones; identification words on the
// right are interpreted in the renamed factor.
AmalgamationResult amalgamate(const Presentation& left, const Presentation& right,
                              const std::vector<Identification>& ids);

// Picks a name not present in `taken` by appending _2, _3, ... to `base`.
std::string fresh_name(const std::string& base, const std::vector<std::string>& taken);

} // namespace symgeo
