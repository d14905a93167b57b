#pragma once

#include "symgeo/presentation.hpp"

#include <optional>

namespace symgeo {

enum class TrivialityStatus {
    ProvedTrivial,
    ProvedAbelianizationNontrivial,
    Inconclusive,
};

std::string to_string(TrivialityStatus s);

// One Tietze elimination: `gen` was replaced everywhere by `image`, justified
// by a relator that, rotated, reads gen^{+-1} * w with w not mentioning gen.
struct EliminationStep {
    std::string gen;
    Word image;
};

struct TrivialityCertificate {
    TrivialityStatus status = TrivialityStatus::Inconclusive;
    std::vector<EliminationStep> order;
    std::vector<std::string> remaining_generators;
    std::vector<Word> remaining_relators;
    AbelianInvariants abelianization; // of the input presentation
    i64 steps_used = 0;
};

inline constexpr i64 kDefaultEliminationBudget = 10000;

// Deterministic saturation: repeatedly scan relators (shortest first, then
// lexicographic) for a syllable g^{+-1} whose generator occurs nowhere else
// in that relator, and eliminate g by the complementary subword. Rotations of
// each relator are considered, so conjugated occurrences are found without a
// separate pass. Relators of the shape [g,h] are additionally mined as
// commutation facts; words are normalized by sorting adjacent commuting
// syllables into name order (with free reduction) before each scan, which is
// what lets conjugator clutter cancel. Status is ProvedTrivial iff every
// generator is eliminated within the budget.
TrivialityCertificate eliminate_to_trivial(const Presentation& p,
                                           i64 budget = kDefaultEliminationBudget);

// Re-derives the certificate against the original presentation: each step
// must be justified by a current relator, and a ProvedTrivial status must
// leave no generators. Returns false on any mismatch.
bool replay_certificate(const Presentation& p, const TrivialityCertificate& cert);

} // namespace symgeo
