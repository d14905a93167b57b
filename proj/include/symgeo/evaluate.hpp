#pragma once

#include "symgeo/blocks.hpp"
#include "symgeo/eliminate.hpp"
#include "symgeo/recipe.hpp"

#include <optional>

namespace symgeo {

enum class Pi1Status {
    ProvedTrivial,            // engine certificate on the carried presentation
    AssertedTrivial,          // quoted fact; no presentation to check
    AbelianizationNontrivial, // engine computed H1 != 0
    Inconclusive,
    Unknown,
};

std::string to_string(Pi1Status s);

// Folded result of a recipe. The presentation, when present, models the
// fundamental group of the manifold minus its surviving marked tori; closed
// relators that need a torus filled first wait in `ambient` until every
// blocking torus has been consumed with a dead meridian.
struct ManifoldState {
    CharNumbers ch{};

    bool has_presentation = false;
    Presentation pres;
    std::vector<AmbientRelator> ambient;

    std::vector<TorusMarker> tori;
    std::vector<SurfaceMarker> surfaces;

    // Quoted simple connectivity, used when no presentation is carried. When
    // surviving tori hold the complement_simply_connected flag, the claim
    // extends to the complement of those tori.
    bool asserted_pi1_trivial = false;

    // Soundness bookkeeping for the presentation: a sum along surfaces whose
    // meridians could not be shown to die may have imposed closed-manifold
    // relators (blocks proved-trivial claims); identifications that were not
    // expressible as words may be missing (blocks nontrivial-H1 claims).
    bool pres_may_add_relations = false;
    bool pres_may_lack_relations = false;

    std::vector<std::string> minimality_chain;
    bool sticky_odd = false; // odd intersection form inherited from a factor

    const TorusMarker* find_torus(const std::string& name) const;
    const SurfaceMarker* find_surface(const std::string& name) const;

    // Presentation plus every ambient relator whose blockers are all gone.
    Presentation certification_presentation() const;

    // Some surviving structure certifies the intersection form is odd: an
    // inherited odd factor, an odd signature, or a surviving surface of odd
    // square.
    bool odd_form_witness() const;
};

struct Pi1Report {
    Pi1Status status = Pi1Status::Unknown;
    std::optional<TrivialityCertificate> certificate;
};

ManifoldState state_from_block(const Block& b);

// Fiber sum along same-genus markers whose squares cancel. Marker names may
// refer to tori (genus 1, square 0) or surfaces. Empty gluing means the
// default convention: push-offs and meridian pairwise for tori, index-wise
// generator images for surfaces.
ManifoldState apply_sum(const ManifoldState& a, const std::string& fa,
                        const ManifoldState& b, const std::string& fb,
                        const std::vector<GluingPair>& gluing);

// Torus surgery along the named curve: characteristic numbers unchanged, the
// relator meridian * curve^sign is imposed, the torus is consumed.
ManifoldState apply_luttinger(const ManifoldState& x, const std::string& torus,
                              const std::string& curve, int sign);

// (e, sigma) -> (e+1, sigma-1). With `at`, the named surface becomes its
// proper transform: square drops by one and its meridian dies against the
// exceptional sphere.
ManifoldState apply_blow_up(const ManifoldState& x, const std::optional<std::string>& at);

// Smooths a connected plumbing of surfaces (repeats allowed for square-0
// components) with n intersection points into one surface.
ManifoldState apply_resolve(const ManifoldState& x,
                            const std::vector<std::string>& components, i64 intersections);

ManifoldState evaluate(const Recipe& r);

Pi1Report certify(const ManifoldState& s, i64 budget = kDefaultEliminationBudget);

} // namespace symgeo
