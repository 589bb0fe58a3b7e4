#pragma once

#include "m11/rational.hpp"

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace m11 {

/// Largest number of generic generators a context may carry. Each generator
/// contributes two even variables (x_r, x_r') and two odd ones (y_r, y_r').
inline constexpr int kMaxGenerators = 8;

/// Bitset of odd generators. Bit i < k is y_{i+1}, bit k + i is y'_{i+1}, so
/// the integer order of bits is the canonical order y1 < ... < yk < y1' < ... < yk'.
using OddMask = std::uint32_t;

class ContextMismatch : public std::invalid_argument {
public:
    ContextMismatch(int a, int b);
};

/// Even exponents plus odd mask. Exponent slots beyond 2k are always zero.
struct Monomial {
    std::array<std::uint16_t, 2 * kMaxGenerators> exponents{};
    OddMask odd = 0;
    std::uint16_t degree = 0;  ///< total even degree

    [[nodiscard]] int odd_degree() const { return std::popcount(odd); }
    [[nodiscard]] bool is_even() const { return odd == 0; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic on the even part (earlier variables dominate), then the
/// odd mask as an integer.
std::strong_ordering compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Sign (+1/-1) of reordering the concatenation a·b of two disjoint canonical
/// odd monomials into canonical order.
int reorder_sign(OddMask a, OddMask b);

/// Element of K[X;Y] = K[X] ⊗ E(Y) over k generators.
///
/// Terms are stored in strictly decreasing monomial order with nonzero
/// coefficients, so equality is structural and the zero polynomial is the
/// empty term list.
class SuperPoly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    /// Context-free zero; adopts the context of whatever it is combined with.
    SuperPoly() = default;
    explicit SuperPoly(int k);

    static SuperPoly constant(int k, const Rational& c);
    static SuperPoly x(int k, int r, bool primed = false);
    static SuperPoly y(int k, int r, bool primed = false);
    static SuperPoly monomial(int k, const Monomial& m, const Rational& c);
    /// Normalizes an arbitrary term list: sorts, merges, drops zeros.
    static SuperPoly from_terms(int k, std::vector<Term> terms);

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// True when no term carries odd variables (the element lies in K[X]).
    [[nodiscard]] bool is_even_poly() const;
    /// True for a rational constant (including 0).
    [[nodiscard]] bool is_constant() const;
    /// Coefficient of the empty monomial, i.e. the value at all variables = 0.
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] const Term& leading() const { return terms_.front(); }

    SuperPoly operator-() const;
    SuperPoly& operator+=(const SuperPoly& rhs);
    SuperPoly& operator-=(const SuperPoly& rhs);
    SuperPoly& operator*=(const Rational& c);

    friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
    friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
    friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
    friend SuperPoly operator*(SuperPoly a, const Rational& c) { return a *= c; }
    friend SuperPoly operator*(const Rational& c, SuperPoly a) { return a *= c; }

    friend bool operator==(const SuperPoly& a, const SuperPoly& b);

    /// Human-readable canonical form, e.g. "x1^2*y1*y2' - 1/2*x2".
    [[nodiscard]] std::string str() const;

private:
    int k_ = 0;
    std::vector<Term> terms_;
};

/// Elements of K[X] are SuperPoly values with no odd part; operations that
/// require one check SuperPoly::is_even_poly().
using EvenPoly = SuperPoly;

/// Same polynomial after x_i <-> x_i', y_i <-> y_i'. An involutive automorphism.
SuperPoly prime(const SuperPoly& p);

/// The part of p of odd degree n. Throws std::out_of_range unless 0 <= n <= 2k.
SuperPoly component(const SuperPoly& p, int n);

/// p^e by repeated squaring; p^0 = 1.
SuperPoly power(const SuperPoly& p, unsigned e);

class InexactDivision : public std::domain_error {
public:
    explicit InexactDivision(SuperPoly remainder);
    [[nodiscard]] const SuperPoly& remainder() const { return remainder_; }

private:
    SuperPoly remainder_;
};

/// Exact division by an even polynomial. Returns q with q·d = p, or throws
/// InexactDivision carrying the remainder of the long division.
SuperPoly divide_exact(const SuperPoly& p, const EvenPoly& d);

/// Plain multivariate long division in the canonical monomial order:
/// p = quotient·d + remainder with no remainder term divisible by LT(d).
struct DivisionResult {
    SuperPoly quotient;
    SuperPoly remainder;
};
DivisionResult long_divide(const SuperPoly& p, const EvenPoly& d);

enum class QrsKind { q, r, s };

/// q_n, r_n or s_n in the variable pair (x_pair, x_pair'):
///   q_n = sum_{i=0}^{n} x^i x'^{n-i},
///   r_n = sum_{i=0}^{n-1} (n-i) x^{n-1-i} x'^i,
///   s_n(x, x') = r_n(x', x).
/// Throws std::invalid_argument for n < 0, or n < 1 with r / s.
EvenPoly qrs(QrsKind kind, int n, int pair, int k);

/// All odd monomials of degree n in lexicographic order of their sorted
/// generator lists; for k = 2 this is y1y2, y1y1', y1y2', y2y1', y2y2', y1'y2'
/// at n = 2.
std::vector<OddMask> odd_basis(int n, int k);

/// Coordinates of p in the K[X]-basis given by the odd monomials in `basis`.
/// Throws std::invalid_argument if p has a term outside the span.
std::vector<EvenPoly> coordinates(const SuperPoly& p, std::span<const OddMask> basis);

/// Inverse of coordinates().
SuperPoly from_coordinates(int k, std::span<const EvenPoly> coords, std::span<const OddMask> basis);

/// p·(odd monomial); convenience for the y-multiplications used throughout.
SuperPoly times_odd(const SuperPoly& p, OddMask m);

/// Name of generator bit `bit` in context k, e.g. "y2'".
std::string odd_name(int bit, int k);
/// Name of even slot `slot` in context k, e.g. "x1'".
std::string even_name(int slot, int k);

}  // namespace m11
