#include "symgeo/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace symgeo {

namespace {

i64 iabs(i64 v) { return v < 0 ? -v : v; }

void swap_rows(IntMatrix& m, size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row[i] += k * row[j]
void add_row(IntMatrix& m, size_t i, size_t j, i64 k) {
    for (size_t c = 0; c < m.cols; ++c) m.at(i, c) += k * m.at(j, c);
}

void add_col(IntMatrix& m, size_t i, size_t j, i64 k) {
    for (size_t r = 0; r < m.rows; ++r) m.at(r, i) += k * m.at(r, j);
}

} // namespace

std::vector<i64> smith_normal_form(IntMatrix m) {
    std::vector<i64> diag;
    size_t t = 0;
    while (t < m.rows && t < m.cols) {
        // pick the nonzero entry of least magnitude in the trailing block
        size_t pr = t, pc = t;
        i64 best = 0;
        for (size_t r = t; r < m.rows; ++r)
            for (size_t c = t; c < m.cols; ++c) {
                i64 v = iabs(m.at(r, c));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        if (best == 0) break;
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);

        bool clean = true;
        for (size_t r = t + 1; r < m.rows; ++r) {
            i64 q = m.at(r, t) / m.at(t, t);
            if (q != 0) add_row(m, r, t, -q);
            if (m.at(r, t) != 0) clean = false;
        }
        for (size_t c = t + 1; c < m.cols; ++c) {
            i64 q = m.at(t, c) / m.at(t, t);
            if (q != 0) add_col(m, c, t, -q);
            if (m.at(t, c) != 0) clean = false;
        }
        if (!clean) continue; // smaller remainders exist; repick pivot

        // enforce divisibility of the trailing block by the pivot
        bool divides = true;
        for (size_t r = t + 1; r < m.rows && divides; ++r)
            for (size_t c = t + 1; c < m.cols && divides; ++c)
                if (m.at(r, c) % m.at(t, t) != 0) {
                    add_row(m, t, r, 1);
                    divides = false;
                }
        if (!divides) continue;

        diag.push_back(iabs(m.at(t, t)));
        ++t;
    }
    // strip 0s (none should appear) and keep nonzero entries only
    std::vector<i64> out;
    for (i64 d : diag)
        if (d != 0) out.push_back(d);
    return out;
}

AbelianInvariants abelian_invariants(const IntMatrix& relations) {
    AbelianInvariants inv;
    std::vector<i64> d = smith_normal_form(relations);
    inv.rank = static_cast<i64>(relations.cols) - static_cast<i64>(d.size());
    for (i64 v : d)
        if (v > 1) inv.torsion.push_back(v);
    return inv;
}

} // namespace symgeo
