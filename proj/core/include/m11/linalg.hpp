#pragma once

#include "m11/superpoly.hpp"

#include <functional>
#include <vector>

namespace m11 {

using PolyVector = std::vector<EvenPoly>;

/// Dense rows × cols matrix over K[X], row-major.
class PolyMatrix {
public:
    PolyMatrix(int k, std::size_t rows, std::size_t cols);

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    [[nodiscard]] const EvenPoly& at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
    /// Throws std::invalid_argument if `value` has odd terms.
    void set(std::size_t i, std::size_t j, EvenPoly value);

    void append_row(const PolyVector& row);
    [[nodiscard]] PolyMatrix with_rows_permuted(const std::vector<std::size_t>& order) const;

    [[nodiscard]] PolyVector apply(const PolyVector& v) const;

private:
    int k_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<EvenPoly> cells_;
};

/// K(X)-basis of a right kernel, every vector with polynomial entries of
/// content 1, integer coefficients with gcd 1 and a positive leading
/// coefficient in its first nonzero entry.
struct KernelBasis {
    std::size_t dimension = 0;  ///< number of unknowns
    std::vector<PolyVector> vectors;
    [[nodiscard]] std::size_t rank() const { return vectors.size(); }
};

/// gcd of two polynomials of K[X], normalized to leading coefficient 1.
/// gcd(0, 0) = 0.
EvenPoly poly_gcd(const EvenPoly& a, const EvenPoly& b);

/// gcd of the entries. Throws std::invalid_argument for an all-zero vector.
EvenPoly content(const PolyVector& v);

/// Divides out the content and scales by a rational so the coefficients are
/// coprime integers with a positive leading coefficient in the first nonzero
/// entry. The zero vector is returned unchanged.
PolyVector normalize_vector(PolyVector v);

/// Right kernel of M over K(X) by fraction-free Gauss-Jordan elimination.
/// Independent blocks of M (connected components of its nonzero pattern) are
/// eliminated separately. A matrix with no rows has the full standard basis as
/// its kernel.
KernelBasis ff_kernel(const PolyMatrix& m);

class NoSolution : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NonPolynomialSolution : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Unique solution of M x = b over K(X), required to have entries in K[X].
/// M must have full column rank (std::invalid_argument otherwise).
PolyVector solve_in_polys(const PolyMatrix& m, const PolyVector& b);

/// Matrix whose columns are the given vectors.
PolyMatrix columns_matrix(int k, const std::vector<PolyVector>& columns);

/// Matrix of a K[X]-linear map between free modules, given by its action on
/// each domain basis vector (returned as codomain coordinates).
PolyMatrix map_matrix(int k, std::size_t domain_rank, std::size_t codomain_rank,
                      const std::function<PolyVector(std::size_t)>& image_of_basis_vector);

}  // namespace m11
