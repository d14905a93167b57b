#pragma once

#include "symgeo/common.hpp"

namespace symgeo {

// Characteristic numbers of a closed oriented 4-manifold, kept as exact
// integers. e is the Euler characteristic, sigma the signature.
struct CharNumbers {
    i64 e = 0;
    i64 sigma = 0;

    i64 c1_squared() const { return 2 * e + 3 * sigma; }

    // (e + sigma)/4, exact. Throws when e + sigma is not divisible by 4.
    i64 chi_h() const;

    // True iff e + sigma == 0 (mod 4), i.e. the pair can belong to a closed
    // almost-complex (in particular symplectic) 4-manifold.
    bool symplectic_parity() const { return (e + sigma) % 4 == 0; }

    bool operator==(const CharNumbers&) const = default;
};

CharNumbers char_from_e_sigma(i64 e, i64 sigma);

// Constructor for closed-manifold data: throws if the parity condition fails.
CharNumbers closed_char(i64 e, i64 sigma);

// Inverse of (c1^2, chi_h): sigma = c - 8*chi, e = 4*chi - sigma.
CharNumbers char_from_c_chi(i64 c, i64 chi);

// Region realized by the construction scheme: 0 <= c <= 8*chi - 2.
bool in_geography_cone(i64 c, i64 chi);

// The four pairs inside the cone that the scheme cannot reach.
bool is_exception(i64 c, i64 chi);

} // namespace symgeo
