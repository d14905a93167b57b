#pragma once

#include "symgeo/chars.hpp"
#include "symgeo/presentation.hpp"

#include <optional>
#include <vector>

namespace symgeo {

// A marked Lagrangian or symplectic torus inside a block. Word data (meridian
// and the two push-offs) lives in the block's complement presentation; axiom
// tori carry facts instead of words.
struct TorusMarker {
    std::string name;
    bool has_words = false;
    Word mu; // meridian
    Word m;  // first push-off
    Word l;  // second push-off
    bool complement_simply_connected = false;
    std::string origin; // block the torus came from, for minimality notes
};

// A marked symplectic surface with genus/self-intersection data and the
// images of its standard generators in the complement, when known.
struct SurfaceMarker {
    std::string name;
    i64 genus = 0;
    i64 square = 0;
    bool has_images = false;
    std::vector<Word> images; // 2*genus words when has_images
    bool meridian_trivial = false;
    bool complement_simply_connected = false;
    bool pi1_surjects = false; // pi1(surface) -> pi1(block) onto, and the
                               // complement inclusion is an iso
    std::string dual_to;       // geometrically dual marker, "" if none
    std::string origin;
};

// Relators that hold in the closed block but not necessarily in the
// complement of its marked tori. They participate in computations only after
// every blocking torus has been consumed.
struct AmbientRelator {
    Word w;
    std::vector<std::string> blockers; // torus names still alive
};

struct Block {
    std::string name;
    CharNumbers ch;

    bool has_presentation = false;
    Presentation complement; // pi1 of the block minus all its markers
    std::vector<AmbientRelator> ambient;

    std::vector<TorusMarker> tori;
    std::vector<SurfaceMarker> surfaces;

    bool asserted_simply_connected = false;
    bool asserted_minimal = false;
    std::string minimality_note;
    bool odd_intersection_form = false;

    std::string citation;
};

// Named catalog lookup. Parametrized entries: "E" and "E'" take {k}, k >= 1;
// "FxG" takes {f, g} with f >= 2, g >= 0. Throws on unknown names or bad
// parameters.
Block catalog(const std::string& name, const std::vector<i64>& params = {});

// All catalog names in presentation order (parametrized entries listed once).
std::vector<std::string> catalog_names();

// Complement of a product of a genus-f and a genus-g surface with the 2g
// marked Lagrangian tori used for surgeries. f >= 2 required.
Block product_surface_complement(i64 f, i64 g);

// Manifolds quoted for specific small odd targets, keyed by (c1^2, chi_h).
std::optional<Block> sporadic_lookup(i64 c, i64 chi);

} // namespace symgeo
