#pragma once

#include "m11/generic.hpp"
#include "m11/random.hpp"

namespace testing_support {

using namespace m11;

inline SuperPoly X(int r, bool primed = false, int k = 2) { return SuperPoly::x(k, r, primed); }
inline SuperPoly Y(int r, bool primed = false, int k = 2) { return SuperPoly::y(k, r, primed); }
inline SuperPoly C(const Rational& c, int k = 2) { return SuperPoly::constant(k, c); }

// Random element with small exponents; odd_degree >= 0 makes it homogeneous.
inline SuperPoly random_poly(Rng& rng, int k, int terms, int odd_degree = -1, bool even_only = false)
{
    SuperPoly acc = SuperPoly::constant(k, 0);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int s = 0; s < 2 * k; ++s) {
            auto e = static_cast<std::uint16_t>(rng.uniform(0, 2) == 0 ? rng.uniform(0, 2) : 0);
            m.exponents[static_cast<std::size_t>(s)] = e;
            m.degree = static_cast<std::uint16_t>(m.degree + e);
        }
        if (!even_only) {
            if (odd_degree >= 0) {
                auto basis = odd_basis(odd_degree, k);
                m.odd = basis[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(basis.size()) - 1))];
            } else {
                m.odd = static_cast<OddMask>(rng.uniform(0, (1 << (2 * k)) - 1));
            }
        }
        acc += SuperPoly::monomial(k, m, Rational(rng.nonzero(5), rng.uniform(1, 3)));
    }
    return acc;
}

inline SuperMatrix identity2() { return SuperMatrix::identity(2); }

}  // namespace testing_support
