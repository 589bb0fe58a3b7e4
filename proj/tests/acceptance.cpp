// Runs every acceptance criterion at its stated size and time limit and
// prints one PASS/FAIL line per criterion. Exit status is 0 only if all pass.

#include "oracle.hpp"

#include "m11/classify.hpp"
#include "m11/generic.hpp"
#include "m11/linalg.hpp"
#include "m11/ncparse.hpp"
#include "m11/random.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace m11;

namespace {

constexpr int k2 = 2;

// Empty string means success; anything else is the first counterexample.
using Body = std::function<std::string(Rng&)>;

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    Body body;
};

oracle::Matrix oracle_of(const SuperMatrix& m) { return oracle::from_library(m, m.k()); }

bool oracle_zero(const oracle::Matrix& m)
{
    for (const auto& e : m.e)
        if (!e.terms.empty())
            return false;
    return true;
}

bool oracle_central(const SuperMatrix& m)
{
    oracle::Matrix o = oracle_of(m);
    for (int r = 1; r <= m.k(); ++r)
        if (!oracle_zero(oracle::commutator(o, oracle::generic(m.k(), r))))
            return false;
    return true;
}

mpq_class oracle_constant(const oracle::Poly& p)
{
    auto it = p.terms.find({std::vector<int>(static_cast<std::size_t>(2 * p.k), 0), {}});
    return it == p.terms.end() ? mpq_class(0) : it->second;
}

Centrality oracle_verdict(const SuperMatrix& m)
{
    if (!oracle_central(m))
        return Centrality::not_central;
    return oracle_constant(oracle_of(m).e[0]) != 0 ? Centrality::central : Centrality::strongly_central;
}

// q_n, r_n, s_n straight from their defining sums.
oracle::Poly def_q(int n, int pair)
{
    oracle::Poly acc = oracle::constant(k2, 0);
    for (int i = 0; i <= n; ++i)
        acc = acc + oracle::pow(oracle::x(k2, pair, false), i) * oracle::pow(oracle::x(k2, pair, true), n - i);
    return acc;
}

oracle::Poly def_r(int n, int pair, bool swapped = false)
{
    oracle::Poly a = oracle::x(k2, pair, swapped);
    oracle::Poly b = oracle::x(k2, pair, !swapped);
    oracle::Poly acc = oracle::constant(k2, 0);
    for (int i = 0; i <= n - 1; ++i)
        acc = acc + mpq_class(n - i) * (oracle::pow(a, n - 1 - i) * oracle::pow(b, i));
    return acc;
}

oracle::Poly def_s(int n, int pair) { return def_r(n, pair, true); }

oracle::Matrix oracle_power(const oracle::Matrix& c, int n)
{
    oracle::Matrix acc{{oracle::constant(c.e[0].k, 1), oracle::constant(c.e[0].k, 0), oracle::constant(c.e[0].k, 0),
                        oracle::constant(c.e[0].k, 1)}};
    for (int i = 0; i < n; ++i)
        acc = acc * c;
    return acc;
}

SuperMatrix prefix(int n, int m)
{
    SuperMatrix p = n > 0 ? power_closed(1, n) : SuperMatrix::identity(2);
    return m > 0 ? p * power_closed(2, m) : p;
}

bool in_span(const std::vector<PolyVector>& generators, const PolyVector& v)
{
    try {
        solve_in_polys(columns_matrix(2, generators), v);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

std::string golden(Rng&)
{
    auto h = oracle::h_elements();
    oracle::Matrix expected{{mpq_class(-2) * h.h1 + h.h4, mpq_class(-2) * h.h2, mpq_class(2) * h.h3,
                             mpq_class(-2) * h.h1 - h.h4}};
    if (!(oracle_of(evaluate(parse("[t1,t2]^2"), k2)) == expected))
        return "[C1,C2]^2 differs from the h-expression";
    return "";
}

std::string powers(Rng&)
{
    for (int r = 1; r <= 2; ++r) {
        oracle::Matrix c = oracle::generic(k2, r);
        oracle::Poly x = oracle::x(k2, r, false), xp = oracle::x(k2, r, true);
        oracle::Poly y = oracle::y(k2, r, false), yp = oracle::y(k2, r, true);
        for (int n = 1; n <= 12; ++n) {
            oracle::Matrix closed = oracle_of(power_closed(r, n));
            if (!(closed == oracle_power(c, n)))
                return "C" + std::to_string(r) + "^" + std::to_string(n) + " differs from repeated multiplication";
            oracle::Matrix display{{oracle::pow(x, n) + y * yp * def_r(n - 1, r), y * def_q(n - 1, r),
                                    yp * def_q(n - 1, r), oracle::pow(xp, n) - y * yp * def_s(n - 1, r)}};
            if (!(closed == display))
                return "C" + std::to_string(r) + "^" + std::to_string(n) + " differs from its displayed form";
        }
    }
    return "";
}

std::string relations(Rng&)
{
    using oracle::pow;
    for (int pair = 1; pair <= 2; ++pair) {
        oracle::Poly x = oracle::x(k2, pair, false), xp = oracle::x(k2, pair, true);
        oracle::Poly d = xp - x;
        std::string tag = " (pair " + std::to_string(pair) + ")";
        for (int n = 1; n <= 10; ++n) {
            std::string at = " at n=" + std::to_string(n) + tag;
            if (!(oracle::from_library(qrs(QrsKind::q, n, pair, k2), k2) == def_q(n, pair)) ||
                !(oracle::from_library(qrs(QrsKind::r, n, pair, k2), k2) == def_r(n, pair)) ||
                !(oracle::from_library(qrs(QrsKind::s, n, pair, k2), k2) == def_s(n, pair)))
                return "library q/r/s differ from their definitions" + at;
            if (!(def_r(n, pair) == def_q(n - 1, pair) + x * def_r(n - 1, pair)))
                return "r recurrence" + at;
            if (!(def_s(n, pair) == def_q(n - 1, pair) + xp * def_s(n - 1, pair)))
                return "s recurrence" + at;
            if (!(def_s(n, pair) + def_r(n, pair) == mpq_class(n + 1) * def_q(n - 1, pair)))
                return "s + r identity" + at;
            if (!(def_q(n, pair) == pow(x, n) + xp * def_q(n - 1, pair)) ||
                !(def_q(n, pair) == pow(xp, n) + x * def_q(n - 1, pair)))
                return "q recurrences" + at;
            if (!(d * def_q(n - 1, pair) == pow(xp, n) - pow(x, n)))
                return "difference of powers" + at;
            for (int m = 1; m <= 10; ++m) {
                oracle::Poly lhs = pow(x, n) * pow(xp, m) - pow(x, m) * pow(xp, n);
                oracle::Poly rhs = d * (def_q(n, pair) * def_q(m - 1, pair) - def_q(m, pair) * def_q(n - 1, pair));
                if (!(lhs == rhs))
                    return "antisymmetric identity at m=" + std::to_string(m) + at;
            }
        }
    }
    return "";
}

std::string commutators(Rng&)
{
    oracle::Matrix g[2] = {oracle::generic(k2, 1), oracle::generic(k2, 2)};
    for (int q = 2; q <= 7; ++q) {
        auto words = standard_words(q);
        if (words.size() != (std::size_t{1} << (q - 2)))
            return "wrong number of words at length " + std::to_string(q);
        for (const auto& w : words) {
            oracle::Matrix direct = g[w.letters[0] - 1];
            for (std::size_t i = 1; i < w.letters.size(); ++i)
                direct = oracle::commutator(direct, g[w.letters[i] - 1]);
            SuperMatrix closed;
            try {
                closed = comm_closed(w);
            } catch (const InexactDivision&) {
                return "inexact division for " + w.str();
            }
            if (!(oracle_of(closed) == direct))
                return "closed form differs for " + w.str();
        }
    }
    return "";
}

std::string basis_j(Rng&)
{
    auto h = oracle::h_elements();
    const auto& lib = h_constants();
    if (!(oracle::from_library(lib.h1, k2) == h.h1) || !(oracle::from_library(lib.h2, k2) == h.h2) ||
        !(oracle::from_library(lib.h3, k2) == h.h3) || !(oracle::from_library(lib.h4, k2) == h.h4))
        return "library h elements differ from their defining products";
    const std::size_t expected[] = {0, 0, 1, 2, 1};
    std::vector<KernelBasis> kernels;
    for (int n = 0; n <= 4; ++n) {
        kernels.push_back(annihilator_J(n));
        if (kernels.back().rank() != expected[n])
            return "component " + std::to_string(n) + " has rank " + std::to_string(kernels.back().rank());
        PolyMatrix map = annihilator_map(n);
        for (const auto& v : kernels.back().vectors)
            for (const auto& e : map.apply(v))
                if (!e.is_zero())
                    return "kernel vector of component " + std::to_string(n) + " is not annihilated";
    }
    const PolyVector& g2 = kernels[2].vectors.front();
    oracle::Poly as_poly = oracle::from_library(from_coordinates(k2, g2, odd_basis(2, k2)), k2);
    if (!(as_poly == h.h4) && !(as_poly == mpq_class(-1) * h.h4))
        return "component-2 generator is not +-h4";
    if (content(g2) != SuperPoly::constant(k2, 1))
        return "component-2 generator does not have content 1";
    std::vector<PolyVector> h23 = {coordinates(lib.h2, odd_basis(3, k2)), coordinates(lib.h3, odd_basis(3, k2))};
    for (const auto& v : h23)
        if (!in_span(kernels[3].vectors, v))
            return "h2 or h3 outside the component-3 kernel";
    for (const auto& v : kernels[3].vectors)
        if (!in_span(h23, v))
            return "component-3 generator outside span{h2, h3}";
    PolyVector h1 = coordinates(lib.h1, odd_basis(4, k2));
    if (!in_span(kernels[4].vectors, h1) || !in_span({h1}, kernels[4].vectors.front()))
        return "component 4 differs from K[X] h1";
    return "";
}

std::string nozerodiv(Rng&)
{
    for (int r = 1; r <= 2; ++r)
        for (Side side : {Side::left, Side::right}) {
            KernelBasis kb = zero_divisor_kernel(r, side);
            std::string which = "C" + std::to_string(r) + (side == Side::left ? " left" : " right");
            if (kb.dimension != 64)
                return which + ": system has " + std::to_string(kb.dimension) + " unknowns";
            if (kb.rank() != 0)
                return which + ": kernel has rank " + std::to_string(kb.rank());
        }
    return "";
}

std::string theorem(Rng& rng)
{
    for (int i = 0; i < 500; ++i) {
        CanonicalElement ce = random_canonical(rng, 6, 5);
        Centrality structural = classify(ce).kind;
        Centrality direct = oracle_verdict(expand_canonical(ce));
        if (structural != direct)
            return "sample " + std::to_string(i) + " disagrees: " + to_string(structural) + " vs " +
                   to_string(direct) + "\n" + ce.str();
    }
    return "";
}

std::string centralone(Rng& rng)
{
    std::vector<CommWord> words;
    for (int q = 2; q <= 4; ++q)
        for (auto& w : standard_words(q))
            words.push_back(w);
    for (int total = 1; total <= 8; ++total)
        for (int n = 0; n <= total; ++n) {
            SuperMatrix p = prefix(n, total - n);
            std::string tag = "C1^" + std::to_string(n) + " C2^" + std::to_string(total - n);
            if (is_central(p, 2))
                return tag + " is central";
            for (const auto& w : words)
                if (is_central(p * comm_closed(w), 2))
                    return tag + " " + w.str() + " is central";
        }
    for (int i = 0; i < 50; ++i) {
        SuperMatrix f = prefix(rng.uniform(0, 3), rng.uniform(0, 3));
        int factors = rng.uniform(2, 3);
        for (int j = 0; j < factors; ++j)
            f = f * comm_closed(random_word(rng, rng.uniform(2, 4)));
        if (!oracle_central(f))
            return "random product " + std::to_string(i) + " with " + std::to_string(factors) +
                   " commutator factors is not central";
    }
    return "";
}

std::string popov(Rng& rng)
{
    for (int i = 0; i < 200; ++i) {
        std::vector<SuperMatrix> g;
        for (int j = 0; j < 5; ++j)
            g.push_back(random_f_element(rng, 2, 3));
        SuperMatrix c = commutator(g[0], g[1]);
        if (!commutator(c * c, g[0]).is_zero())
            return "[[t1,t2]^2,t1] nonzero at sample " + std::to_string(i);
        if (!commutator(commutator(c, commutator(g[2], g[3])), g[4]).is_zero())
            return "[[t1,t2],[t3,t4],t5] nonzero at sample " + std::to_string(i);
    }
    return "";
}

std::string centre(Rng& rng)
{
    for (int i = 0; i < 50; ++i) {
        SuperMatrix m = random_central_element(rng);
        if (!oracle_central(m))
            return "generated element " + std::to_string(i) + " is not central";
        oracle::Matrix o = oracle_of(m);
        mpq_class a00 = oracle_constant(o.e[0]);
        // a central element has a scalar constant part
        if (oracle_constant(o.e[3]) != a00 || oracle_constant(o.e[1]) != 0 || oracle_constant(o.e[2]) != 0)
            return "constant part of element " + std::to_string(i) + " is not scalar";
        SuperMatrix rest = m - SuperMatrix::scalar(2, SuperPoly::constant(2, Rational(a00)));
        if (!is_strongly_central(rest))
            return "element " + std::to_string(i) + " minus its scalar part is not strongly central";
    }
    for (int i = 0; i < 50; ++i) {
        SuperMatrix p = random_strongly_central_element(rng) * random_strongly_central_element(rng) *
                        random_strongly_central_element(rng);
        if (!p.is_zero())
            return "triple product " + std::to_string(i) + " is nonzero";
    }
    return "";
}

std::string three_generators(Rng&)
{
    SuperMatrix u = evaluate(parse("[t1,t2,[t1,t3]]"), 3);
    if (!oracle_central(u) || !is_central(u, 3))
        return "[C1,C2,[C1,C3]] is not central";
    SuperMatrix v = evaluate(parse("t2 [t1,t2,[t1,t3]]"), 3);
    if (oracle_central(v) || is_central(v, 3))
        return "C2 [C1,C2,[C1,C3]] is central";
    return "";
}

std::string strong(Rng& rng)
{
    for (int i = 0; i < 200; ++i) {
        SuperMatrix m = random_central_element(rng);
        if (is_strongly_central(m) != strongly_central_bounded(m, 2, 4))
            return "sample " + std::to_string(i) + " disagrees";
    }
    return "";
}

std::string autoorder(Rng& rng)
{
    for (int i = 0; i < 100; ++i) {
        NCExpr e = random_nc_polynomial(rng, 2);
        oracle::Matrix o = oracle_of(evaluate(e, 2));
        if (!(o.e[3] == oracle::prime(o.e[0])) || !(o.e[2] == oracle::prime(o.e[1])))
            return "sample " + std::to_string(i) + ": " + pretty(e);
    }
    return "";
}

}  // namespace

int main(int argc, char** argv)
{
    std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 20240611;
    const std::vector<Criterion> criteria = {
        {1, "golden-identity", 1, golden},
        {2, "closed-form-powers", 5, powers},
        {3, "qrs-relations", 1, relations},
        {4, "commutator-closed-form", 10, commutators},
        {5, "annihilator-basis", 10, basis_j},
        {6, "no-zero-divisors", 30, nozerodiv},
        {7, "structural-vs-direct", 60, theorem},
        {8, "central-products", 30, centralone},
        {9, "popov-identities", 60, popov},
        {10, "centre-decomposition", 30, centre},
        {11, "three-generator-centre", 5, three_generators},
        {12, "strong-centrality", 60, strong},
        {13, "prime-symmetry", 10, autoorder},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Rng rng(seed + static_cast<std::uint64_t>(c.id));
        auto start = std::chrono::steady_clock::now();
        std::string problem;
        try {
            problem = c.body(rng);
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (problem.empty() && secs > c.limit_s)
            problem = "exceeded the time limit";
        std::printf("%s %2d %-24s (%.3f s, limit %g s)%s%s\n", problem.empty() ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.limit_s, problem.empty() ? "" : ": ", problem.c_str());
        failures += !problem.empty();
    }
    std::printf("%d/%zu criteria passed, seed %llu\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
                static_cast<unsigned long long>(seed));
    return failures == 0 ? 0 : 1;
}
