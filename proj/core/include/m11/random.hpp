#pragma once

#include "m11/classify.hpp"
#include "m11/ncparse.hpp"

#include <cstdint>
#include <random>

namespace m11 {

/// Seeded source with results that do not depend on the standard library in
/// use: mt19937_64 output is fully specified, and the reductions below are ours.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi);
    bool coin() { return uniform(0, 1) == 1; }
    /// Nonzero integer in [-bound, bound].
    int nonzero(int bound);

private:
    std::mt19937_64 engine_;
};

/// Random noncommutative polynomial in t_1..t_k: a sum of at most max_terms
/// monomials of degree <= max_degree with coefficients in [-coeff_bound, coeff_bound].
NCExpr random_nc_polynomial(Rng& rng, int k, int max_degree = 4, int max_terms = 6, int coeff_bound = 3);

/// Random expression tree using every node kind, for parser round trips.
NCExpr random_ast(Rng& rng, int k, int depth);

/// Image in F of random_nc_polynomial (k generators).
SuperMatrix random_f_element(Rng& rng, int k, int max_degree = 4, int max_terms = 6);

/// Random commutator word with prefix (1, 2) and the given length.
CommWord random_word(Rng& rng, int length);

/// Random canonical element of total degree <= max_degree with at most
/// max_terms terms of each kind. About a third of the draws are built to
/// be central (cancelling beta groups, no alpha beyond alpha_00) and some
/// of those strongly central, so every verdict is well represented.
CanonicalElement random_canonical(Rng& rng, int max_degree = 6, int max_terms = 5);

/// Random central element of F at k = 2: scalar plus a combination of
/// strongly central pieces built from cancelling commutator pairs and
/// products of two commutators.
SuperMatrix random_central_element(Rng& rng);

/// Random strongly central element of F at k = 2.
SuperMatrix random_strongly_central_element(Rng& rng);

}  // namespace m11
