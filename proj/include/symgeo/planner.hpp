#pragma once

#include "symgeo/evaluate.hpp"

namespace symgeo {

// Split of (m, n) into block counts: m = d + 2c + 3b + 4g and
// n = b + c + d + k + g, with b >= 1 whenever g > 0.
struct Decomposition {
    i64 b = 0;
    i64 c = 0;
    i64 d = 0;
    i64 g = 0;
    i64 k = 0;

    bool operator==(const Decomposition&) const = default;
};

// Deterministic decomposition for 0 <= m <= 4n - 1, n >= 1. Throws outside
// the precondition; the two linear identities are re-checked on every exit.
Decomposition arith_decompose(i64 m, i64 n);

enum class PlanStatus {
    Realized,
    Sporadic,
    Exception,
    OutOfRegion,
    Unplannable, // in-cone pair none of the construction branches reaches
};

std::string to_string(PlanStatus s);

struct PlanResult {
    PlanStatus status = PlanStatus::OutOfRegion;
    RecipePtr recipe; // set for Realized and Sporadic
    std::optional<Decomposition> decomposition;
    CharNumbers expected{};
};

// Even-c planner: telescoping chain from the decomposition of (c/2, chi)
// with the residual torus handling (two surgeries, or one surgery plus an
// elliptic-surface sum, or the log-transform manifold when no block occurs).
PlanResult plan_even(i64 c, i64 chi);

// Full planner over the cone 0 <= c <= 8 chi - 2.
PlanResult plan(i64 c, i64 chi);

struct CoverageRow {
    i64 c = 0;
    i64 chi = 0;
    PlanStatus status = PlanStatus::OutOfRegion;
    CharNumbers expected{};
    bool char_match = false;
    Pi1Status pi1 = Pi1Status::Unknown;
    std::string recipe_id; // empty when no recipe
};

struct CoverageReport {
    std::vector<CoverageRow> rows; // ordered by (chi, c)
    std::vector<std::pair<i64, i64>> exceptions;
    i64 realized = 0;
    i64 sporadic = 0;
    i64 exception = 0;
    i64 unplannable = 0;
};

CoverageReport scan(i64 chi_max, int jobs = 1, i64 budget = kDefaultEliminationBudget);

// Signature -3 family: e = 7 + 4k, sigma = -3, simply connected; k >= 2.
RecipePtr build_sig3_recipe(i64 k);

// Same construction without the second surgery: pi1 = Z, with the marked
// torus T2 surviving; k >= 2, e = 7 + 4k, sigma = -3.
RecipePtr build_P_recipe(i64 k);
Block plan_P_block(i64 k);

// Genus-raised first block: e = 6 + 4g, sigma = -2, pi1 abelianization Z^2.
RecipePtr build_Bg_recipe(i64 g);

// The positive-signature block: e = 176, sigma = 4, asserted simply
// connected, with the marked torus T4 of simply connected complement.
RecipePtr build_S_recipe();

// Sums a (c, chi) auxiliary piece onto `base_recipe` along its marked torus:
// result characteristic numbers = base + char_from_c_chi(c, chi). Even c
// needs 0 <= c <= 8 chi - 2; odd c needs 1 <= c <= 8 chi - 7 (and odd
// c in {1, 3} only has a construction at (1, 2)).
RecipePtr wedge_extend(RecipePtr base_recipe, const std::string& torus, i64 c, i64 chi);

// (e, sigma) = (4k + 4, 0) for k >= 45.
RecipePtr plan_signature_zero(i64 k);

// (e, sigma) = (4k + 1, -1) for k >= 49.
RecipePtr plan_signature_minus_one(i64 k);

} // namespace symgeo
