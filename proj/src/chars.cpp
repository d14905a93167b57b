#include "symgeo/chars.hpp"

namespace symgeo {

i64 CharNumbers::chi_h() const {
    if ((e + sigma) % 4 != 0)
        throw Error("chi_h undefined: e + sigma = " + std::to_string(e + sigma) +
                    " is not divisible by 4");
    return (e + sigma) / 4;
}

CharNumbers char_from_e_sigma(i64 e, i64 sigma) { return CharNumbers{e, sigma}; }

CharNumbers closed_char(i64 e, i64 sigma) {
    CharNumbers ch{e, sigma};
    if (!ch.symplectic_parity())
        throw Error("closed symplectic 4-manifold needs e + sigma == 0 (mod 4), got e=" +
                    std::to_string(e) + " sigma=" + std::to_string(sigma));
    return ch;
}

CharNumbers char_from_c_chi(i64 c, i64 chi) {
    i64 sigma = c - 8 * chi;
    i64 e = 4 * chi - sigma;
    return CharNumbers{e, sigma};
}

bool in_geography_cone(i64 c, i64 chi) { return c >= 0 && c <= 8 * chi - 2; }

bool is_exception(i64 c, i64 chi) {
    return (c == 5 && chi == 1) || (c == 9 && chi == 2) || (c == 11 && chi == 2) ||
           (c == 13 && chi == 2);
}

} // namespace symgeo
