#pragma once

// Deliberately naive reference arithmetic for K[X;Y], written without any
// of the library's data structures: terms live in a std::map keyed by
// (even exponents, ordered list of odd generators) and odd products are
// sorted by bubble sort, one transposition at a time.

#include "m11/generic.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

struct Poly {
    int k = 2;
    // odd generators: 0..k-1 are y_1..y_k, k..2k-1 are y_1'..y_k'
    std::map<std::pair<std::vector<int>, std::vector<int>>, mpq_class> terms;

    void add_term(std::vector<int> even, std::vector<int> odd, const mpq_class& c)
    {
        auto key = std::make_pair(std::move(even), std::move(odd));
        mpq_class& slot = terms[key];
        slot += c;
        if (slot == 0)
            terms.erase(key);
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.k == b.k && a.terms == b.terms; }
};

inline Poly constant(int k, const mpq_class& c)
{
    Poly p{k, {}};
    if (c != 0)
        p.add_term(std::vector<int>(static_cast<std::size_t>(2 * k), 0), {}, c);
    return p;
}

inline Poly x(int k, int r, bool primed)
{
    Poly p{k, {}};
    std::vector<int> e(static_cast<std::size_t>(2 * k), 0);
    e[static_cast<std::size_t>((primed ? k : 0) + r - 1)] = 1;
    p.add_term(e, {}, 1);
    return p;
}

inline Poly y(int k, int r, bool primed)
{
    Poly p{k, {}};
    p.add_term(std::vector<int>(static_cast<std::size_t>(2 * k), 0), {(primed ? k : 0) + r - 1}, 1);
    return p;
}

inline Poly operator+(const Poly& a, const Poly& b)
{
    Poly out = a;
    for (const auto& [key, c] : b.terms)
        out.add_term(key.first, key.second, c);
    return out;
}

inline Poly operator*(const mpq_class& s, const Poly& a)
{
    Poly out{a.k, {}};
    for (const auto& [key, c] : a.terms)
        out.add_term(key.first, key.second, s * c);
    return out;
}

inline Poly operator-(const Poly& a, const Poly& b) { return a + mpq_class(-1) * b; }

// Sorts an odd generator list in place; returns the sign, or 0 on a repeat.
inline int sort_odd(std::vector<int>& odd)
{
    int sign = 1;
    for (std::size_t pass = 0; pass < odd.size(); ++pass)
        for (std::size_t i = 0; i + 1 < odd.size(); ++i) {
            if (odd[i] == odd[i + 1])
                return 0;
            if (odd[i] > odd[i + 1]) {
                std::swap(odd[i], odd[i + 1]);
                sign = -sign;
            }
        }
    return sign;
}

inline Poly operator*(const Poly& a, const Poly& b)
{
    Poly out{a.k, {}};
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            std::vector<int> odd = ka.second;
            odd.insert(odd.end(), kb.second.begin(), kb.second.end());
            int sign = sort_odd(odd);
            if (sign == 0)
                continue;
            std::vector<int> even = ka.first;
            for (std::size_t i = 0; i < even.size(); ++i)
                even[i] += kb.first[i];
            out.add_term(even, odd, mpq_class(sign) * ca * cb);
        }
    return out;
}

inline Poly pow(const Poly& a, int n)
{
    Poly out = constant(a.k, 1);
    for (int i = 0; i < n; ++i)
        out = out * a;
    return out;
}

// The automorphism exchanging every variable with its primed twin.
inline Poly prime(const Poly& a)
{
    const int k = a.k;
    Poly out{k, {}};
    for (const auto& [key, c] : a.terms) {
        std::vector<int> even(key.first.size());
        for (int s = 0; s < 2 * k; ++s)
            even[static_cast<std::size_t>(s < k ? s + k : s - k)] = key.first[static_cast<std::size_t>(s)];
        std::vector<int> odd;
        for (int b : key.second)
            odd.push_back(b < k ? b + k : b - k);
        int sign = sort_odd(odd);
        out.add_term(even, odd, mpq_class(sign) * c);
    }
    return out;
}

inline Poly from_library(const m11::SuperPoly& p, int k)
{
    Poly out{k, {}};
    for (const auto& t : p.terms()) {
        std::vector<int> even;
        for (int s = 0; s < 2 * k; ++s)
            even.push_back(t.mono.exponents[static_cast<std::size_t>(s)]);
        std::vector<int> odd;
        for (int b = 0; b < 2 * k; ++b)
            if (t.mono.odd & (1u << b))
                odd.push_back(b);
        out.add_term(even, odd, t.coeff.to_mpq());
    }
    return out;
}

struct Matrix {
    std::array<Poly, 4> e;
    friend bool operator==(const Matrix&, const Matrix&) = default;
};

inline Matrix operator*(const Matrix& a, const Matrix& b)
{
    Matrix out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.e[static_cast<std::size_t>(2 * i + j)] = a.e[static_cast<std::size_t>(2 * i)] * b.e[static_cast<std::size_t>(j)] +
                                                         a.e[static_cast<std::size_t>(2 * i + 1)] * b.e[static_cast<std::size_t>(2 + j)];
    return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b)
{
    Matrix out;
    for (std::size_t i = 0; i < 4; ++i)
        out.e[i] = a.e[i] - b.e[i];
    return out;
}

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline Matrix generic(int k, int r) { return {{x(k, r, false), y(k, r, false), y(k, r, true), x(k, r, true)}}; }

inline Matrix from_library(const m11::SuperMatrix& m, int k)
{
    return {{from_library(m.at(0, 0), k), from_library(m.at(0, 1), k), from_library(m.at(1, 0), k),
             from_library(m.at(1, 1), k)}};
}

// The four elements h1..h4, built from their defining products.
struct H {
    Poly h1, h2, h3, h4;
};

inline H h_elements()
{
    const int k = 2;
    Poly d1 = x(k, 1, true) - x(k, 1, false);
    Poly d2 = x(k, 2, true) - x(k, 2, false);
    Poly w = y(k, 1, false) * d2 - y(k, 2, false) * d1;
    Poly wp = y(k, 1, true) * d2 - y(k, 2, true) * d1;
    return {y(k, 1, false) * y(k, 2, false) * y(k, 1, true) * y(k, 2, true), y(k, 1, false) * y(k, 2, false) * wp,
            y(k, 1, true) * y(k, 2, true) * w, wp * w};
}

}  // namespace oracle
