#pragma once

#include "m11/linalg.hpp"
#include "m11/superpoly.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace m11 {

/// 2×2 matrix over K[X;Y].
class SuperMatrix {
public:
    SuperMatrix() = default;
    explicit SuperMatrix(int k);
    SuperMatrix(SuperPoly a11, SuperPoly a12, SuperPoly a21, SuperPoly a22);

    static SuperMatrix identity(int k);
    static SuperMatrix scalar(int k, const SuperPoly& p);
    static SuperMatrix diag(const SuperPoly& a, const SuperPoly& d);

    [[nodiscard]] int k() const { return k_; }
    /// 0-based (row, col).
    [[nodiscard]] const SuperPoly& at(int i, int j) const { return e_[static_cast<std::size_t>(2 * i + j)]; }
    SuperPoly& at(int i, int j) { return e_[static_cast<std::size_t>(2 * i + j)]; }

    [[nodiscard]] bool is_zero() const;
    /// Entrywise value at all variables = 0.
    [[nodiscard]] std::array<Rational, 4> constant_term() const;
    [[nodiscard]] std::string str() const;

    SuperMatrix operator-() const;
    SuperMatrix& operator+=(const SuperMatrix& rhs);
    SuperMatrix& operator-=(const SuperMatrix& rhs);
    SuperMatrix& operator*=(const Rational& c);

    friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
    friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator*(SuperMatrix a, const Rational& c) { return a *= c; }
    friend SuperMatrix operator*(const Rational& c, SuperMatrix a) { return a *= c; }
    /// p·M, multiplying every entry on the left.
    friend SuperMatrix operator*(const SuperPoly& p, const SuperMatrix& m);

    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);

private:
    int k_ = 0;
    std::array<SuperPoly, 4> e_{};
};

SuperMatrix commutator(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix power(const SuperMatrix& m, unsigned n);

/// C_r = [[x_r, y_r], [y_r', x_r']] for r = 1..k.
std::vector<SuperMatrix> make_generic(int k);

/// The four elements of K[X;Y] (k = 2) whose K[X]-span is the common
/// annihilator of (x2'-x2)y1 - (x1'-x1)y2 and its primed image.
struct HConstants {
    SuperPoly h1, h2, h3, h4;
};
const HConstants& h_constants();

/// A0 = h1·I, A1 = diag(0, h1), A2 = [[0, h2], [-h3, h4]], A3 = h4·I.
struct AConstants {
    SuperMatrix a0, a1, a2, a3;
};
const AConstants& a_constants();

/// Left-normed commutator [t_{i1}, t_{i2}, ..., t_{iq}], q >= 2, letters 1-based.
struct CommWord {
    std::vector<int> letters;

    /// Throws std::invalid_argument if q < 2 or a letter is outside 1..k.
    void validate(int k) const;
    /// Number of occurrences of letter r.
    [[nodiscard]] int degree_in(int r) const;
    [[nodiscard]] int length() const { return static_cast<int>(letters.size()); }
    [[nodiscard]] bool has_standard_prefix() const
    {
        return letters.size() >= 2 && letters[0] == 1 && letters[1] == 2;
    }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const CommWord&, const CommWord&) = default;
    friend auto operator<=>(const CommWord&, const CommWord&) = default;
};

/// Left-normed commutator of the given matrices by repeated commutator().
SuperMatrix evaluate_word(const CommWord& w, const std::vector<SuperMatrix>& gens);

/// All words of length q over {1, 2} beginning with (1, 2), in lexicographic order.
std::vector<CommWord> standard_words(int q);

/// Closed form of C_r^n (n >= 1):
///   [[x^n + y y' r_{n-1},  y q_{n-1}], [y' q_{n-1},  x'^n - y y' s_{n-1}]]
/// with x = x_r, y = y_r and r_0 = s_0 = 0.
SuperMatrix power_closed(int r, int n, int k = 2);

/// Closed form of a left-normed commutator with prefix (1, 2) at k = 2:
/// (x1'-x1)^{n-1} (x2'-x2)^{m-1} [[F, W], [(-1)^q V, F]] where
/// W = y1(x2'-x2) - y2(x1'-x1), V = y2'(x1'-x1) - y1'(x2'-x2) and
/// F = (W y_i' + (-1)^q y_i V) / (x_i' - x_i), i the last letter. F is only a
/// fraction for q >= 3; the prefactor times F is always a polynomial.
SuperMatrix comm_closed(const CommWord& w);

/// Commutes with every generator C_1..C_k (k taken from the matrix context).
bool is_central(const SuperMatrix& m, int k);

/// k = 2 only: central with zero constant term.
bool is_strongly_central(const SuperMatrix& m);

/// M·W is central for every word W in C_1..C_k of length <= max_length.
bool strongly_central_bounded(const SuperMatrix& m, int k, int max_length);

/// M = a·I + f1·A1 + f4·A2 with f1, f4 in K[X].
struct CentralDecomposition {
    SuperPoly a;
    EvenPoly f1;
    EvenPoly f4;
};

class DecompositionFailure : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Splits a matrix commuting with C1, C2 into the a·I + f1·A1 + f4·A2 shape.
/// Does not certify that the matrix lies in the algebra generated by C1, C2.
CentralDecomposition central_decompose(const SuperMatrix& m);

/// w1 = (x2'-x2)y1 - (x1'-x1)y2 and its primed image w1'.
SuperPoly annihilated_w1();
SuperPoly annihilated_w1_primed();

/// Matrix of f -> (f·w1, f·w1') from odd degree n (basis odd_basis(n, 2)) to
/// two copies of odd degree n + 1.
PolyMatrix annihilator_map(int n);

/// Kernel of annihilator_map(n), 0 <= n <= 4.
KernelBasis annihilator_J(int n);

/// Coordinates of h1..h4 in their odd bases (degrees 4, 3, 3, 2).
PolyVector h_coordinates(int which);

enum class Side { left, right };

/// Kernel of the K[X]-linear map on 2×2 matrices over K[X;Y] given by `map`.
/// The domain basis is E_ij·(odd monomial), all 4·2^{2k} of them.
KernelBasis matrix_map_kernel(int k, const std::function<SuperMatrix(const SuperMatrix&)>& map);

/// Kernel of A -> C_r A (left) or A -> A C_r (right), k = 2.
KernelBasis zero_divisor_kernel(int r, Side side);

}  // namespace m11
