#pragma once

#include "symgeo/common.hpp"

#include <vector>

namespace symgeo {

// Row-major integer matrix.
struct IntMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<i64> a;

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

    i64& at(size_t r, size_t c) { return a[r * cols + c]; }
    i64 at(size_t r, size_t c) const { return a[r * cols + c]; }
};

// Nonzero diagonal of the Smith normal form, as positive integers with
// d1 | d2 | ... | dk. A zero matrix yields an empty vector.
std::vector<i64> smith_normal_form(IntMatrix m);

// Invariants of a finitely generated abelian group Z^rank + sum Z/d.
struct AbelianInvariants {
    i64 rank = 0;
    std::vector<i64> torsion; // entries > 1, dividing chain order

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const AbelianInvariants&) const = default;
};

// Cokernel invariants of the relation matrix: columns are generators,
// rows are relators (exponent sums).
AbelianInvariants abelian_invariants(const IntMatrix& relations);

} // namespace symgeo
