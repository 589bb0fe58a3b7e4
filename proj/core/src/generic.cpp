#include "m11/generic.hpp"

#include <algorithm>

namespace m11 {

namespace {

constexpr int kPairK = 2;

SuperPoly xv(int r, bool primed, int k = kPairK) { return SuperPoly::x(k, r, primed); }
SuperPoly yv(int r, bool primed, int k = kPairK) { return SuperPoly::y(k, r, primed); }

// x_r' - x_r
SuperPoly delta(int r, int k = kPairK) { return xv(r, true, k) - xv(r, false, k); }

int sign_power(int q) { return (q % 2 == 0) ? 1 : -1; }

SuperPoly odd_monomial(int k, OddMask m)
{
    Monomial mono;
    mono.odd = m;
    return SuperPoly::monomial(k, mono, 1);
}

void require_pair_context(const SuperMatrix& m, const char* what)
{
    if (m.k() != kPairK && !m.is_zero())
        throw std::invalid_argument(std::string(what) + " is defined for two generators only");
}

}  // namespace

SuperMatrix::SuperMatrix(int k) : k_(k), e_{SuperPoly(k), SuperPoly(k), SuperPoly(k), SuperPoly(k)} {}

SuperMatrix::SuperMatrix(SuperPoly a11, SuperPoly a12, SuperPoly a21, SuperPoly a22)
    : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)}
{
    for (const auto& e : e_) {
        if (e.k() == 0)
            continue;
        if (k_ != 0 && e.k() != k_)
            throw ContextMismatch(k_, e.k());
        k_ = e.k();
    }
}

SuperMatrix SuperMatrix::identity(int k) { return scalar(k, SuperPoly::constant(k, 1)); }

SuperMatrix SuperMatrix::scalar(int k, const SuperPoly& p)
{
    SuperMatrix m(k);
    m.at(0, 0) = p;
    m.at(1, 1) = p;
    return m;
}

SuperMatrix SuperMatrix::diag(const SuperPoly& a, const SuperPoly& d)
{
    return SuperMatrix(a, SuperPoly(), SuperPoly(), d);
}

bool SuperMatrix::is_zero() const
{
    return std::all_of(e_.begin(), e_.end(), [](const SuperPoly& p) { return p.is_zero(); });
}

std::array<Rational, 4> SuperMatrix::constant_term() const
{
    return {e_[0].constant_term(), e_[1].constant_term(), e_[2].constant_term(), e_[3].constant_term()};
}

std::string SuperMatrix::str() const
{
    std::string out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + at(i, j).str() + "\n";
    return out;
}

SuperMatrix SuperMatrix::operator-() const
{
    SuperMatrix r = *this;
    for (auto& e : r.e_)
        e = -e;
    return r;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& rhs)
{
    for (std::size_t i = 0; i < 4; ++i)
        e_[i] += rhs.e_[i];
    if (k_ == 0)
        k_ = rhs.k_;
    return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& rhs)
{
    for (std::size_t i = 0; i < 4; ++i)
        e_[i] -= rhs.e_[i];
    if (k_ == 0)
        k_ = rhs.k_;
    return *this;
}

SuperMatrix& SuperMatrix::operator*=(const Rational& c)
{
    for (auto& e : e_)
        e *= c;
    return *this;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b)
{
    SuperMatrix out(a.k_ != 0 ? a.k_ : b.k_);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            SuperPoly s = a.at(i, 0) * b.at(0, j);
            s += a.at(i, 1) * b.at(1, j);
            out.at(i, j) = std::move(s);
        }
    return out;
}

SuperMatrix operator*(const SuperPoly& p, const SuperMatrix& m)
{
    SuperMatrix out(m.k_ != 0 ? m.k_ : p.k());
    for (std::size_t i = 0; i < 4; ++i)
        out.e_[i] = p * m.e_[i];
    return out;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b)
{
    for (std::size_t i = 0; i < 4; ++i)
        if (!(a.e_[i] == b.e_[i]))
            return false;
    return true;
}

SuperMatrix commutator(const SuperMatrix& a, const SuperMatrix& b) { return a * b - b * a; }

SuperMatrix power(const SuperMatrix& m, unsigned n)
{
    SuperMatrix result = SuperMatrix::identity(m.k());
    SuperMatrix base = m;
    while (n > 0) {
        if (n & 1u)
            result = result * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

std::vector<SuperMatrix> make_generic(int k)
{
    if (k < 1 || k > kMaxGenerators)
        throw std::invalid_argument("make_generic: generator count out of range");
    std::vector<SuperMatrix> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int r = 1; r <= k; ++r)
        out.emplace_back(xv(r, false, k), yv(r, false, k), yv(r, true, k), xv(r, true, k));
    return out;
}

const HConstants& h_constants()
{
    static const HConstants h = [] {
        const SuperPoly d1 = delta(1), d2 = delta(2);
        const SuperPoly y1 = yv(1, false), y2 = yv(2, false), y1p = yv(1, true), y2p = yv(2, true);
        HConstants c;
        c.h1 = y1 * y2 * y1p * y2p;
        c.h2 = y1 * y2 * (y1p * d2 - y2p * d1);
        c.h3 = y1p * y2p * (y1 * d2 - y2 * d1);
        c.h4 = (y1p * d2 - y2p * d1) * (y1 * d2 - y2 * d1);
        return c;
    }();
    return h;
}

const AConstants& a_constants()
{
    static const AConstants a = [] {
        const auto& h = h_constants();
        AConstants c;
        c.a0 = SuperMatrix::scalar(kPairK, h.h1);
        c.a1 = SuperMatrix::diag(SuperPoly(kPairK), h.h1);
        c.a2 = SuperMatrix(SuperPoly(kPairK), h.h2, -h.h3, h.h4);
        c.a3 = SuperMatrix::scalar(kPairK, h.h4);
        return c;
    }();
    return a;
}

void CommWord::validate(int k) const
{
    if (letters.size() < 2)
        throw std::invalid_argument("commutator word needs at least two letters");
    for (int l : letters)
        if (l < 1 || l > k)
            throw std::invalid_argument("commutator letter " + std::to_string(l) + " outside 1.." + std::to_string(k));
}

int CommWord::degree_in(int r) const
{
    return static_cast<int>(std::count(letters.begin(), letters.end(), r));
}

std::string CommWord::str() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(letters[i]);
    }
    return out + "]";
}

SuperMatrix evaluate_word(const CommWord& w, const std::vector<SuperMatrix>& gens)
{
    w.validate(static_cast<int>(gens.size()));
    SuperMatrix acc = gens[static_cast<std::size_t>(w.letters[0] - 1)];
    for (std::size_t i = 1; i < w.letters.size(); ++i)
        acc = commutator(acc, gens[static_cast<std::size_t>(w.letters[i] - 1)]);
    return acc;
}

std::vector<CommWord> standard_words(int q)
{
    if (q < 2)
        throw std::invalid_argument("standard_words: length must be >= 2");
    std::vector<CommWord> out;
    const int free_letters = q - 2;
    for (unsigned bits = 0; bits < (1u << free_letters); ++bits) {
        CommWord w{{1, 2}};
        for (int i = free_letters - 1; i >= 0; --i)
            w.letters.push_back((bits >> i) & 1u ? 2 : 1);
        out.push_back(std::move(w));
    }
    return out;
}

SuperMatrix power_closed(int r, int n, int k)
{
    if (n < 1)
        throw std::invalid_argument("power_closed: exponent must be >= 1");
    const SuperPoly x = xv(r, false, k), xp = xv(r, true, k);
    const SuperPoly y = yv(r, false, k), yp = yv(r, true, k);
    const SuperPoly yyp = y * yp;
    const auto un = static_cast<unsigned>(n);
    const SuperPoly q = qrs(QrsKind::q, n - 1, r, k);
    const SuperPoly rr = n >= 2 ? qrs(QrsKind::r, n - 1, r, k) : SuperPoly(k);
    const SuperPoly ss = n >= 2 ? qrs(QrsKind::s, n - 1, r, k) : SuperPoly(k);
    return SuperMatrix(power(x, un) + yyp * rr, y * q, yp * q, power(xp, un) - yyp * ss);
}

SuperMatrix comm_closed(const CommWord& w)
{
    w.validate(kPairK);
    if (!w.has_standard_prefix())
        throw std::invalid_argument("comm_closed: word must begin with (1,2)");
    const int n = w.degree_in(1), m = w.degree_in(2), q = w.length();
    const int i = w.letters.back();
    const SuperPoly d1 = delta(1), d2 = delta(2);
    const SuperPoly wpoly = yv(1, false) * d2 - yv(2, false) * d1;
    const SuperPoly vpoly = yv(2, true) * d1 - yv(1, true) * d2;
    const Rational sgn = sign_power(q);
    SuperPoly numerator = wpoly * yv(i, true) + sgn * (yv(i, false) * vpoly);
    SuperPoly scale = power(d1, static_cast<unsigned>(n - 1)) * power(d2, static_cast<unsigned>(m - 1));
    // F itself is a fraction once q >= 3; only scale*F is polynomial, so the
    // division by (x_i' - x_i) is applied after scaling. It must be exact: an
    // InexactDivision here is a bug, not a user error.
    SuperPoly diagonal = divide_exact(scale * numerator, delta(i));
    return SuperMatrix(diagonal, scale * wpoly, scale * (sgn * vpoly), diagonal);
}

bool is_central(const SuperMatrix& m, int k)
{
    for (const auto& c : make_generic(k))
        if (!commutator(m, c).is_zero())
            return false;
    return true;
}

bool is_strongly_central(const SuperMatrix& m)
{
    require_pair_context(m, "is_strongly_central");
    if (!is_central(m, kPairK))
        return false;
    auto c = m.constant_term();
    return std::all_of(c.begin(), c.end(), [](const Rational& v) { return v.is_zero(); });
}

bool strongly_central_bounded(const SuperMatrix& m, int k, int max_length)
{
    if (max_length < 0)
        throw std::invalid_argument("strongly_central_bounded: negative length");
    const auto gens = make_generic(k);
    std::vector<SuperMatrix> level{m};
    for (int len = 0; len <= max_length; ++len) {
        for (const auto& p : level)
            if (!is_central(p, k))
                return false;
        if (len == max_length)
            break;
        std::vector<SuperMatrix> next;
        next.reserve(level.size() * gens.size());
        for (const auto& p : level)
            for (const auto& g : gens)
                next.push_back(p * g);
        level = std::move(next);
    }
    return true;
}

CentralDecomposition central_decompose(const SuperMatrix& m)
{
    if (m.is_zero())
        return {SuperPoly(kPairK), SuperPoly(kPairK), SuperPoly(kPairK)};
    require_pair_context(m, "central_decompose");
    const auto& h = h_constants();
    const auto b3 = odd_basis(3, kPairK);
    const auto b4 = odd_basis(4, kPairK);

    auto solve_multiple = [](const SuperPoly& target, const SuperPoly& unit, std::span<const OddMask> basis,
                             const char* what) -> EvenPoly {
        try {
            PolyVector rhs = coordinates(target, basis);
            PolyMatrix col = columns_matrix(kPairK, {coordinates(unit, basis)});
            return solve_in_polys(col, rhs).front();
        } catch (const std::exception& e) {
            throw DecompositionFailure(std::string("central_decompose: ") + what + ": " + e.what());
        }
    };

    CentralDecomposition out;
    out.a = m.at(0, 0);
    out.f4 = solve_multiple(m.at(0, 1), h.h2, b3, "(1,2) entry is not a K[X]-multiple of h2");
    out.f1 = solve_multiple(m.at(1, 1) - out.a - out.f4 * h.h4, h.h1, b4,
                            "(2,2) - (1,1) - f4*h4 is not a K[X]-multiple of h1");
    const auto& a = a_constants();
    SuperMatrix rebuilt = SuperMatrix::scalar(kPairK, out.a) + out.f1 * a.a1 + out.f4 * a.a2;
    if (!(rebuilt == m))
        throw DecompositionFailure("central_decompose: matrix does not have the a*I + f1*A1 + f4*A2 shape");
    return out;
}

SuperPoly annihilated_w1() { return delta(2) * yv(1, false) - delta(1) * yv(2, false); }

SuperPoly annihilated_w1_primed() { return delta(2) * yv(1, true) - delta(1) * yv(2, true); }

PolyMatrix annihilator_map(int n)
{
    if (n < 0 || n > 2 * kPairK)
        throw std::out_of_range("annihilator_map: component must be in 0..4");
    const auto domain = odd_basis(n, kPairK);
    const std::vector<OddMask> codomain = n + 1 <= 2 * kPairK ? odd_basis(n + 1, kPairK) : std::vector<OddMask>{};
    const SuperPoly w1 = annihilated_w1(), w1p = annihilated_w1_primed();
    return map_matrix(kPairK, domain.size(), 2 * codomain.size(), [&](std::size_t j) {
        SuperPoly f = odd_monomial(kPairK, domain[j]);
        PolyVector image = coordinates(f * w1, codomain);
        PolyVector second = coordinates(f * w1p, codomain);
        image.insert(image.end(), second.begin(), second.end());
        return image;
    });
}

KernelBasis annihilator_J(int n) { return ff_kernel(annihilator_map(n)); }

PolyVector h_coordinates(int which)
{
    const auto& h = h_constants();
    switch (which) {
    case 1:
        return coordinates(h.h1, odd_basis(4, kPairK));
    case 2:
        return coordinates(h.h2, odd_basis(3, kPairK));
    case 3:
        return coordinates(h.h3, odd_basis(3, kPairK));
    case 4:
        return coordinates(h.h4, odd_basis(2, kPairK));
    default:
        throw std::out_of_range("h_coordinates: index must be 1..4");
    }
}

KernelBasis matrix_map_kernel(int k, const std::function<SuperMatrix(const SuperMatrix&)>& map)
{
    const OddMask mask_count = OddMask{1} << (2 * k);
    std::vector<OddMask> masks(mask_count);
    for (OddMask m = 0; m < mask_count; ++m)
        masks[m] = m;
    const std::size_t rank = 4 * masks.size();
    PolyMatrix mat = map_matrix(k, rank, rank, [&](std::size_t j) {
        const std::size_t entry = j / masks.size();
        SuperMatrix basis(k);
        basis.at(static_cast<int>(entry / 2), static_cast<int>(entry % 2)) = odd_monomial(k, masks[j % masks.size()]);
        SuperMatrix image = map(basis);
        PolyVector coords;
        coords.reserve(rank);
        for (int e = 0; e < 4; ++e) {
            PolyVector part = coordinates(image.at(e / 2, e % 2), masks);
            coords.insert(coords.end(), part.begin(), part.end());
        }
        return coords;
    });
    return ff_kernel(mat);
}

KernelBasis zero_divisor_kernel(int r, Side side)
{
    if (r < 1 || r > kPairK)
        throw std::out_of_range("zero_divisor_kernel: generator index must be 1 or 2");
    const SuperMatrix c = make_generic(kPairK)[static_cast<std::size_t>(r - 1)];
    return matrix_map_kernel(kPairK, [&](const SuperMatrix& a) { return side == Side::left ? c * a : a * c; });
}

}  // namespace m11
