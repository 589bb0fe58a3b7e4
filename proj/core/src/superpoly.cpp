#include "m11/superpoly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace m11 {

namespace {

void check_context(int k)
{
    if (k < 1 || k > kMaxGenerators)
        throw std::invalid_argument("generator count must be in 1.." + std::to_string(kMaxGenerators) + ", got " +
                                    std::to_string(k));
}

int unify(int a, int b, bool a_zero, bool b_zero)
{
    if (a == b)
        return a;
    if (a == 0 && a_zero)
        return b;
    if (b == 0 && b_zero)
        return a;
    throw ContextMismatch(a, b);
}

bool decreasing(const SuperPoly::Term& a, const SuperPoly::Term& b) { return compare(a.mono, b.mono) > 0; }

Monomial multiply_even(const Monomial& a, const Monomial& b)
{
    Monomial r;
    for (std::size_t i = 0; i < r.exponents.size(); ++i) {
        unsigned e = unsigned{a.exponents[i]} + b.exponents[i];
        if (e > 0xffffu)
            throw std::overflow_error("SuperPoly: exponent overflow");
        r.exponents[i] = static_cast<std::uint16_t>(e);
    }
    r.degree = static_cast<std::uint16_t>(a.degree + b.degree);
    return r;
}

bool divides(const Monomial& d, const Monomial& m)
{
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        if (d.exponents[i] > m.exponents[i])
            return false;
    return true;
}

Monomial quotient_mono(const Monomial& m, const Monomial& d)
{
    Monomial r;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        r.exponents[i] = static_cast<std::uint16_t>(m.exponents[i] - d.exponents[i]);
    r.degree = static_cast<std::uint16_t>(m.degree - d.degree);
    r.odd = m.odd;
    return r;
}

std::vector<SuperPoly::Term> merge(const std::vector<SuperPoly::Term>& a, const std::vector<SuperPoly::Term>& b,
                                   bool subtract)
{
    std::vector<SuperPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        if (i == a.size()) {
            out.push_back({b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
            ++j;
            continue;
        }
        auto c = compare(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
            ++j;
        } else {
            Rational sum = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!sum.is_zero())
                out.push_back({a[i].mono, std::move(sum)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

ContextMismatch::ContextMismatch(int a, int b)
    : std::invalid_argument("SuperPoly: mismatched generator contexts k=" + std::to_string(a) + " and k=" +
                            std::to_string(b))
{
}

std::strong_ordering compare(const Monomial& a, const Monomial& b)
{
    if (auto c = a.degree <=> b.degree; c != 0)
        return c;
    if (auto c = a.exponents <=> b.exponents; c != 0)
        return c;
    return a.odd <=> b.odd;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::uint64_t h = 1469598103934665603ULL ^ m.odd;
    for (auto e : m.exponents) {
        h ^= e;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

int reorder_sign(OddMask a, OddMask b)
{
    int inversions = 0;
    while (b != 0) {
        int j = std::countr_zero(b);
        b &= b - 1;
        inversions += std::popcount(j + 1 >= 32 ? 0u : (a >> (j + 1)));
    }
    return (inversions & 1) ? -1 : 1;
}

SuperPoly::SuperPoly(int k) : k_(k) { check_context(k); }

SuperPoly SuperPoly::constant(int k, const Rational& c)
{
    SuperPoly p(k);
    if (!c.is_zero())
        p.terms_.push_back({Monomial{}, c});
    return p;
}

SuperPoly SuperPoly::x(int k, int r, bool primed)
{
    check_context(k);
    if (r < 1 || r > k)
        throw std::out_of_range("even variable index out of range");
    Monomial m;
    m.exponents[static_cast<std::size_t>(r - 1 + (primed ? k : 0))] = 1;
    m.degree = 1;
    return monomial(k, m, 1);
}

SuperPoly SuperPoly::y(int k, int r, bool primed)
{
    check_context(k);
    if (r < 1 || r > k)
        throw std::out_of_range("odd variable index out of range");
    Monomial m;
    m.odd = OddMask{1} << (r - 1 + (primed ? k : 0));
    return monomial(k, m, 1);
}

SuperPoly SuperPoly::monomial(int k, const Monomial& m, const Rational& c)
{
    SuperPoly p(k);
    if (!c.is_zero())
        p.terms_.push_back({m, c});
    return p;
}

SuperPoly SuperPoly::from_terms(int k, std::vector<Term> terms)
{
    SuperPoly p(k);
    std::sort(terms.begin(), terms.end(), decreasing);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().coeff.is_zero())
            p.terms_.pop_back();
    }
    return p;
}

bool SuperPoly::is_even_poly() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.odd == 0; });
}

bool SuperPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{});
}

Rational SuperPoly::constant_term() const
{
    // The empty monomial is the smallest, so it is the last term if present.
    if (!terms_.empty() && terms_.back().mono == Monomial{})
        return terms_.back().coeff;
    return 0;
}

SuperPoly SuperPoly::operator-() const
{
    SuperPoly r = *this;
    for (auto& t : r.terms_)
        t.coeff = -t.coeff;
    return r;
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& rhs)
{
    k_ = unify(k_, rhs.k_, is_zero(), rhs.is_zero());
    if (rhs.terms_.empty())
        return *this;
    terms_ = merge(terms_, rhs.terms_, false);
    return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& rhs)
{
    k_ = unify(k_, rhs.k_, is_zero(), rhs.is_zero());
    if (rhs.terms_.empty())
        return *this;
    terms_ = merge(terms_, rhs.terms_, true);
    return *this;
}

SuperPoly& SuperPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= c;
    return *this;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b)
{
    SuperPoly out;
    out.k_ = unify(a.k_, b.k_, a.is_zero(), b.is_zero());
    if (a.is_zero() || b.is_zero())
        return out;

    if (a.size() == 1 || b.size() == 1) {
        // Multiplication by a single term is injective on monomials, so no
        // merging is needed; only the order may change through the odd part.
        const bool left_single = a.size() == 1;
        const SuperPoly::Term& single = left_single ? a.terms_[0] : b.terms_[0];
        const SuperPoly& other = left_single ? b : a;
        out.terms_.reserve(other.size());
        for (const auto& t : other.terms_) {
            if ((t.mono.odd & single.mono.odd) != 0)
                continue;
            Monomial m = multiply_even(t.mono, single.mono);
            m.odd = t.mono.odd | single.mono.odd;
            int sign = left_single ? reorder_sign(single.mono.odd, t.mono.odd) : reorder_sign(t.mono.odd, single.mono.odd);
            Rational c = left_single ? single.coeff * t.coeff : t.coeff * single.coeff;
            if (sign < 0)
                c = -c;
            out.terms_.push_back({m, std::move(c)});
        }
        std::sort(out.terms_.begin(), out.terms_.end(), decreasing);
        return out;
    }

    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            if ((s.mono.odd & t.mono.odd) != 0)
                continue;
            Monomial m = multiply_even(s.mono, t.mono);
            m.odd = s.mono.odd | t.mono.odd;
            Rational c = s.coeff * t.coeff;
            if (reorder_sign(s.mono.odd, t.mono.odd) < 0)
                acc[m] -= c;
            else
                acc[m] += c;
        }
    }
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero())
            out.terms_.push_back({m, std::move(c)});
    std::sort(out.terms_.begin(), out.terms_.end(), decreasing);
    return out;
}

bool operator==(const SuperPoly& a, const SuperPoly& b)
{
    if (a.is_zero() && b.is_zero())
        return true;
    return a.k_ == b.k_ && a.terms_ == b.terms_;
}

std::string odd_name(int bit, int k)
{
    int r = bit % k + 1;
    return "y" + std::to_string(r) + (bit >= k ? "'" : "");
}

std::string even_name(int slot, int k)
{
    int r = slot % k + 1;
    return "x" + std::to_string(r) + (slot >= k ? "'" : "");
}

std::string SuperPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0)
                c = -c;
        }
        first = false;
        std::vector<std::string> factors;
        for (int slot = 0; slot < 2 * k_; ++slot) {
            auto e = t.mono.exponents[static_cast<std::size_t>(slot)];
            if (e == 0)
                continue;
            factors.push_back(even_name(slot, k_) + (e > 1 ? "^" + std::to_string(e) : ""));
        }
        for (int bit = 0; bit < 2 * k_; ++bit)
            if (t.mono.odd & (OddMask{1} << bit))
                factors.push_back(odd_name(bit, k_));
        if (factors.empty() || !c.is_one())
            factors.insert(factors.begin(), c.str());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0)
                out += "*";
            out += factors[i];
        }
    }
    return out;
}

SuperPoly prime(const SuperPoly& p)
{
    const int k = p.k();
    if (p.is_zero())
        return p;
    std::vector<SuperPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m;
        for (int i = 0; i < k; ++i) {
            m.exponents[static_cast<std::size_t>(i)] = t.mono.exponents[static_cast<std::size_t>(i + k)];
            m.exponents[static_cast<std::size_t>(i + k)] = t.mono.exponents[static_cast<std::size_t>(i)];
        }
        m.degree = t.mono.degree;
        // Images of the generators in their original order; the sign is the
        // parity of the permutation that sorts them.
        std::vector<int> images;
        for (int bit = 0; bit < 2 * k; ++bit)
            if (t.mono.odd & (OddMask{1} << bit))
                images.push_back(bit < k ? bit + k : bit - k);
        int inversions = 0;
        for (std::size_t i = 0; i < images.size(); ++i)
            for (std::size_t j = i + 1; j < images.size(); ++j)
                if (images[i] > images[j])
                    ++inversions;
        for (int img : images)
            m.odd |= OddMask{1} << img;
        terms.push_back({m, (inversions & 1) ? -t.coeff : t.coeff});
    }
    return SuperPoly::from_terms(k, std::move(terms));
}

SuperPoly component(const SuperPoly& p, int n)
{
    if (n < 0 || n > 2 * p.k())
        throw std::out_of_range("component: odd degree " + std::to_string(n) + " outside 0.." + std::to_string(2 * p.k()));
    std::vector<SuperPoly::Term> terms;
    for (const auto& t : p.terms())
        if (t.mono.odd_degree() == n)
            terms.push_back(t);
    return SuperPoly::from_terms(p.k(), std::move(terms));
}

SuperPoly power(const SuperPoly& p, unsigned e)
{
    SuperPoly result = SuperPoly::constant(p.k(), 1);
    SuperPoly base = p;
    while (e > 0) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

InexactDivision::InexactDivision(SuperPoly remainder)
    : std::domain_error("inexact division, remainder " + remainder.str()), remainder_(std::move(remainder))
{
}

DivisionResult long_divide(const SuperPoly& p, const EvenPoly& d)
{
    if (d.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (!d.is_even_poly())
        throw std::invalid_argument("divisor must lie in K[X]");
    const int k = p.is_zero() ? d.k() : p.k();
    if (!p.is_zero() && p.k() != d.k())
        throw ContextMismatch(p.k(), d.k());

    auto cmp = [](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; };
    std::map<Monomial, Rational, decltype(cmp)> work(cmp);
    for (const auto& t : p.terms())
        work.emplace(t.mono, t.coeff);

    const auto& lead = d.leading();
    std::vector<SuperPoly::Term> quotient;
    std::vector<SuperPoly::Term> remainder;
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m = it->first;
        Rational c = it->second;
        work.erase(it);
        if (!divides(lead.mono, m)) {
            remainder.push_back({m, std::move(c)});
            continue;
        }
        Monomial qm = quotient_mono(m, lead.mono);
        Rational qc = c / lead.coeff;
        for (std::size_t i = 1; i < d.size(); ++i) {
            const auto& dt = d.terms()[i];
            Monomial pm = multiply_even(qm, dt.mono);
            pm.odd = qm.odd;
            auto [slot, inserted] = work.try_emplace(pm, 0);
            slot->second -= qc * dt.coeff;
            if (slot->second.is_zero())
                work.erase(slot);
        }
        quotient.push_back({qm, std::move(qc)});
    }
    return {SuperPoly::from_terms(k, std::move(quotient)), SuperPoly::from_terms(k, std::move(remainder))};
}

SuperPoly divide_exact(const SuperPoly& p, const EvenPoly& d)
{
    if (d.is_constant() && !d.is_zero()) {
        SuperPoly q = p;
        q *= Rational(1) / d.constant_term();
        return q;
    }
    auto [q, r] = long_divide(p, d);
    if (!r.is_zero())
        throw InexactDivision(std::move(r));
    return q;
}

EvenPoly qrs(QrsKind kind, int n, int pair, int k)
{
    check_context(k);
    if (pair < 1 || pair > k)
        throw std::out_of_range("qrs: variable pair out of range");
    if (n < 0 || (kind != QrsKind::q && n < 1))
        throw std::invalid_argument("qrs: invalid index n=" + std::to_string(n));
    const auto slot = static_cast<std::size_t>(pair - 1);
    const auto slot_primed = static_cast<std::size_t>(pair - 1 + k);
    auto mono = [&](int e, int e_primed) {
        Monomial m;
        m.exponents[slot] = static_cast<std::uint16_t>(e);
        m.exponents[slot_primed] = static_cast<std::uint16_t>(e_primed);
        m.degree = static_cast<std::uint16_t>(e + e_primed);
        return m;
    };
    std::vector<SuperPoly::Term> terms;
    switch (kind) {
    case QrsKind::q:
        for (int i = 0; i <= n; ++i)
            terms.push_back({mono(i, n - i), 1});
        break;
    case QrsKind::r:
        for (int i = 0; i < n; ++i)
            terms.push_back({mono(n - 1 - i, i), n - i});
        break;
    case QrsKind::s:
        for (int i = 0; i < n; ++i)
            terms.push_back({mono(i, n - 1 - i), n - i});
        break;
    }
    return SuperPoly::from_terms(k, std::move(terms));
}

std::vector<OddMask> odd_basis(int n, int k)
{
    check_context(k);
    if (n < 0 || n > 2 * k)
        throw std::out_of_range("odd_basis: degree " + std::to_string(n) + " outside 0.." + std::to_string(2 * k));
    std::vector<OddMask> out;
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    const int total = 2 * k;
    while (true) {
        OddMask m = 0;
        for (int i : idx)
            m |= OddMask{1} << i;
        out.push_back(m);
        int pos = n - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == total - n + pos)
            --pos;
        if (pos < 0)
            break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < n; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<EvenPoly> coordinates(const SuperPoly& p, std::span<const OddMask> basis)
{
    std::vector<std::vector<SuperPoly::Term>> slots(basis.size());
    for (const auto& t : p.terms()) {
        auto it = std::find(basis.begin(), basis.end(), t.mono.odd);
        if (it == basis.end())
            throw std::invalid_argument("coordinates: term " + SuperPoly::monomial(p.k(), t.mono, t.coeff).str() +
                                        " outside the given odd basis");
        Monomial m = t.mono;
        m.odd = 0;
        slots[static_cast<std::size_t>(it - basis.begin())].push_back({m, t.coeff});
    }
    std::vector<EvenPoly> out;
    out.reserve(basis.size());
    for (auto& s : slots)
        out.push_back(p.k() == 0 ? SuperPoly() : SuperPoly::from_terms(p.k(), std::move(s)));
    return out;
}

SuperPoly from_coordinates(int k, std::span<const EvenPoly> coords, std::span<const OddMask> basis)
{
    if (coords.size() != basis.size())
        throw std::invalid_argument("from_coordinates: length mismatch");
    std::vector<SuperPoly::Term> terms;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!coords[i].is_even_poly())
            throw std::invalid_argument("from_coordinates: coordinate not in K[X]");
        for (const auto& t : coords[i].terms()) {
            Monomial m = t.mono;
            m.odd = basis[i];
            terms.push_back({m, t.coeff});
        }
    }
    return SuperPoly::from_terms(k, std::move(terms));
}

SuperPoly times_odd(const SuperPoly& p, OddMask m)
{
    if (p.is_zero())
        return p;
    Monomial mono;
    mono.odd = m;
    return p * SuperPoly::monomial(p.k(), mono, 1);
}

}  // namespace m11
