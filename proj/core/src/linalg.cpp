#include "m11/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace m11 {

namespace {

// Polynomial viewed as univariate in one even slot, coefficients free of it.
struct Univariate {
    std::vector<EvenPoly> coeffs;  // index = degree in the main slot
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

Univariate split(const EvenPoly& p, int slot)
{
    Univariate u;
    std::vector<std::vector<SuperPoly::Term>> buckets;
    for (const auto& t : p.terms()) {
        auto e = t.mono.exponents[static_cast<std::size_t>(slot)];
        if (buckets.size() <= e)
            buckets.resize(e + 1u);
        Monomial m = t.mono;
        m.exponents[static_cast<std::size_t>(slot)] = 0;
        m.degree = static_cast<std::uint16_t>(m.degree - e);
        buckets[e].push_back({m, t.coeff});
    }
    for (auto& b : buckets)
        u.coeffs.push_back(SuperPoly::from_terms(p.k(), std::move(b)));
    return u;
}

EvenPoly join(const Univariate& u, int slot, int k)
{
    std::vector<SuperPoly::Term> terms;
    for (std::size_t e = 0; e < u.coeffs.size(); ++e) {
        for (const auto& t : u.coeffs[e].terms()) {
            Monomial m = t.mono;
            m.exponents[static_cast<std::size_t>(slot)] = static_cast<std::uint16_t>(e);
            m.degree = static_cast<std::uint16_t>(m.degree + e);
            terms.push_back({m, t.coeff});
        }
    }
    return SuperPoly::from_terms(k, std::move(terms));
}

void trim(Univariate& u)
{
    while (!u.coeffs.empty() && u.coeffs.back().is_zero())
        u.coeffs.pop_back();
}

// Pseudo-remainder of a by b in the main variable.
Univariate prem(Univariate a, const Univariate& b)
{
    const int db = b.degree();
    const EvenPoly& lb = b.coeffs.back();
    while (!a.coeffs.empty() && a.degree() >= db) {
        const int shift = a.degree() - db;
        EvenPoly la = a.coeffs.back();
        for (auto& c : a.coeffs)
            c = lb * c;
        for (int i = 0; i <= db; ++i)
            a.coeffs[static_cast<std::size_t>(i + shift)] -= la * b.coeffs[static_cast<std::size_t>(i)];
        trim(a);
    }
    return a;
}

int highest_slot(const EvenPoly& p)
{
    int best = -1;
    for (const auto& t : p.terms())
        for (int s = 2 * p.k() - 1; s > best; --s)
            if (t.mono.exponents[static_cast<std::size_t>(s)] != 0) {
                best = s;
                break;
            }
    return best;
}

EvenPoly monic(EvenPoly p)
{
    if (p.is_zero())
        return p;
    Rational lc = p.leading().coeff;
    p *= Rational(1) / lc;
    return p;
}

EvenPoly gcd_rec(const EvenPoly& a, const EvenPoly& b);

EvenPoly content_in(const Univariate& u)
{
    EvenPoly g;
    for (const auto& c : u.coeffs) {
        g = g.is_zero() ? monic(c) : gcd_rec(g, c);
        if (g.is_constant() && !g.is_zero())
            break;
    }
    return g;
}

// Also strips the numeric content; without it the pseudo-remainder
// sequence grows its integer coefficients exponentially.
Univariate primitive(Univariate u, const EvenPoly& c)
{
    Rational g;
    for (auto& coeff : u.coeffs) {
        coeff = divide_exact(coeff, c);
        for (const auto& t : coeff.terms())
            g = rational_gcd(g, t.coeff);
    }
    if (!g.is_zero() && !g.is_one()) {
        Rational inv = Rational(1) / g;
        for (auto& coeff : u.coeffs)
            coeff *= inv;
    }
    return u;
}

Rational eval_except(const EvenPoly& p, const std::vector<Rational>& point)
{
    Rational acc;
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (std::size_t s = 0; s < point.size(); ++s)
            for (int e = 0; e < t.mono.exponents[s]; ++e)
                v *= point[s];
        acc += v;
    }
    return acc;
}

// Degree of gcd over Q of two univariate rational polynomials.
int univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b)
{
    auto strip = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back().is_zero())
            v.pop_back();
    };
    strip(a);
    strip(b);
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            Rational f = a.back() / b.back();
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[i + shift] -= f * b[i];
            a.pop_back();
            strip(a);
            if (a.empty())
                break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// Specializing every other variable at a point that keeps both leading
// coefficients nonzero can only raise the gcd degree. A constant image
// gcd therefore proves the primitive parts coprime.
bool image_coprime(const Univariate& ua, const Univariate& ub, int slot, int k)
{
    std::vector<Rational> point(static_cast<std::size_t>(2 * k));
    for (int attempt = 0; attempt < 4; ++attempt) {
        for (std::size_t s = 0; s < point.size(); ++s)
            point[s] = Rational(static_cast<std::int64_t>(3 + 7 * s + 13 * static_cast<std::size_t>(attempt) * (s + 1)));
        point[static_cast<std::size_t>(slot)] = Rational(0);
        std::vector<Rational> ia, ib;
        for (const auto& c : ua.coeffs)
            ia.push_back(eval_except(c, point));
        for (const auto& c : ub.coeffs)
            ib.push_back(eval_except(c, point));
        if (ia.back().is_zero() || ib.back().is_zero())
            continue;
        return univariate_gcd_degree(std::move(ia), std::move(ib)) == 0;
    }
    return false;
}

EvenPoly gcd_rec(const EvenPoly& a, const EvenPoly& b)
{
    if (a.is_zero())
        return monic(b);
    if (b.is_zero())
        return monic(a);
    const int k = a.k();
    if (a.is_constant() || b.is_constant())
        return SuperPoly::constant(k, 1);
    const int slot = std::max(highest_slot(a), highest_slot(b));

    Univariate ua = split(a, slot);
    Univariate ub = split(b, slot);
    EvenPoly ca = content_in(ua);
    EvenPoly cb = content_in(ub);
    EvenPoly c = gcd_rec(ca, cb);
    ua = primitive(std::move(ua), ca);
    ub = primitive(std::move(ub), cb);
    if (ua.degree() < ub.degree())
        std::swap(ua, ub);
    if (ub.degree() == 0 || image_coprime(ua, ub, slot, k))
        return monic(c);
    while (true) {
        Univariate r = prem(ua, ub);
        if (r.coeffs.empty())
            break;
        if (r.degree() == 0) {
            ub = Univariate{{SuperPoly::constant(k, 1)}};
            break;
        }
        ua = std::move(ub);
        ub = primitive(r, content_in(r));
    }
    EvenPoly g = join(ub, slot, k);
    return monic(c * g);
}

void require_even(const EvenPoly& p)
{
    if (!p.is_even_poly())
        throw std::invalid_argument("expected an element of K[X], got " + p.str());
}

// Fraction-free Gauss-Jordan on a copy of `a`. On return every pivot row i
// has entry `det` at pivot_cols[i] and zeros in the other pivot columns.
struct Elimination {
    std::vector<std::vector<EvenPoly>> a;
    std::vector<std::size_t> pivot_cols;
    EvenPoly det;
};

Elimination eliminate(std::vector<std::vector<EvenPoly>> a, std::size_t cols, int k)
{
    Elimination out;
    const std::size_t rows = a.size();
    EvenPoly prev = SuperPoly::constant(k, 1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::optional<std::size_t> best;
        for (std::size_t i = row; i < rows; ++i) {
            if (a[i][col].is_zero())
                continue;
            if (!best || a[i][col].size() < a[*best][col].size())
                best = i;
        }
        if (!best)
            continue;
        std::swap(a[row], a[*best]);
        const EvenPoly piv = a[row][col];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row)
                continue;
            const EvenPoly factor = a[i][col];
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == col)
                    continue;
                EvenPoly v = piv * a[i][j];
                if (!factor.is_zero() && !a[row][j].is_zero())
                    v -= factor * a[row][j];
                a[i][j] = divide_exact(v, prev);
            }
            a[i][col] = EvenPoly();
        }
        prev = piv;
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.det = prev;
    out.a = std::move(a);
    return out;
}

}  // namespace

PolyMatrix::PolyMatrix(int k, std::size_t rows, std::size_t cols)
    : k_(k), rows_(rows), cols_(cols), cells_(rows * cols, SuperPoly(k))
{
}

void PolyMatrix::set(std::size_t i, std::size_t j, EvenPoly value)
{
    require_even(value);
    if (!value.is_zero() && value.k() != k_)
        throw ContextMismatch(k_, value.k());
    cells_.at(i * cols_ + j) = std::move(value);
}

void PolyMatrix::append_row(const PolyVector& row)
{
    if (row.size() != cols_)
        throw std::invalid_argument("append_row: width mismatch");
    for (const auto& r : row)
        require_even(r);
    cells_.insert(cells_.end(), row.begin(), row.end());
    ++rows_;
}

PolyMatrix PolyMatrix::with_rows_permuted(const std::vector<std::size_t>& order) const
{
    PolyMatrix out(k_, 0, cols_);
    for (auto i : order)
        out.append_row(PolyVector(cells_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                  cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
    return out;
}

PolyVector PolyMatrix::apply(const PolyVector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("apply: vector length mismatch");
    PolyVector out(rows_, SuperPoly(k_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero())
                out[i] += at(i, j) * v[j];
    return out;
}

EvenPoly poly_gcd(const EvenPoly& a, const EvenPoly& b)
{
    require_even(a);
    require_even(b);
    return gcd_rec(a, b);
}

EvenPoly content(const PolyVector& v)
{
    EvenPoly g;
    for (const auto& e : v) {
        require_even(e);
        if (e.is_zero())
            continue;
        g = g.is_zero() ? monic(e) : gcd_rec(g, e);
    }
    if (g.is_zero())
        throw std::invalid_argument("content of the zero vector");
    return g;
}

PolyVector normalize_vector(PolyVector v)
{
    if (std::all_of(v.begin(), v.end(), [](const EvenPoly& e) { return e.is_zero(); }))
        return v;
    EvenPoly c = content(v);
    for (auto& e : v)
        e = divide_exact(e, c);
    Rational scale = 0;
    for (const auto& e : v)
        for (const auto& t : e.terms())
            scale = rational_gcd(scale, t.coeff);
    auto first = std::find_if(v.begin(), v.end(), [](const EvenPoly& e) { return !e.is_zero(); });
    if (first->leading().coeff.sign() < 0)
        scale = -scale;
    Rational inv = Rational(1) / scale;
    for (auto& e : v)
        e *= inv;
    return v;
}

KernelBasis ff_kernel(const PolyMatrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    if (cols == 0)
        throw std::invalid_argument("ff_kernel: matrix without columns");
    KernelBasis out;
    out.dimension = cols;

    // Union-find over columns; rows connect every column they touch.
    std::vector<std::size_t> parent(cols);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < rows; ++i) {
        std::optional<std::size_t> anchor;
        for (std::size_t j = 0; j < cols; ++j) {
            if (m.at(i, j).is_zero())
                continue;
            if (!anchor)
                anchor = j;
            else
                parent[find(j)] = find(*anchor);
        }
    }

    std::vector<std::pair<std::size_t, PolyVector>> found;  // (free column, vector)
    std::vector<bool> done(cols, false);
    for (std::size_t root = 0; root < cols; ++root) {
        if (done[find(root)])
            continue;
        const std::size_t r = find(root);
        done[r] = true;
        std::vector<std::size_t> block_cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (find(j) == r)
                block_cols.push_back(j);
        std::vector<std::vector<EvenPoly>> block;
        for (std::size_t i = 0; i < rows; ++i) {
            bool touches = std::any_of(block_cols.begin(), block_cols.end(),
                                       [&](std::size_t j) { return !m.at(i, j).is_zero(); });
            if (!touches)
                continue;
            std::vector<EvenPoly> row;
            row.reserve(block_cols.size());
            for (auto j : block_cols)
                row.push_back(m.at(i, j));
            block.push_back(std::move(row));
        }
        Elimination e = eliminate(std::move(block), block_cols.size(), m.k());
        std::vector<bool> is_pivot(block_cols.size(), false);
        for (auto pc : e.pivot_cols)
            is_pivot[pc] = true;
        for (std::size_t f = 0; f < block_cols.size(); ++f) {
            if (is_pivot[f])
                continue;
            PolyVector v(cols, SuperPoly(m.k()));
            v[block_cols[f]] = e.det;
            for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
                v[block_cols[e.pivot_cols[i]]] = -e.a[i][f];
            found.emplace_back(block_cols[f], normalize_vector(std::move(v)));
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [col, v] : found)
        out.vectors.push_back(std::move(v));
    return out;
}

PolyVector solve_in_polys(const PolyMatrix& m, const PolyVector& b)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    if (b.size() != rows)
        throw std::invalid_argument("solve_in_polys: right-hand side length mismatch");
    std::vector<std::vector<EvenPoly>> aug(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        require_even(b[i]);
        aug[i].reserve(cols + 1);
        for (std::size_t j = 0; j < cols; ++j)
            aug[i].push_back(m.at(i, j));
        aug[i].push_back(b[i]);
    }
    Elimination e = eliminate(std::move(aug), cols + 1, m.k());
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == cols)
        throw NoSolution("solve_in_polys: system is inconsistent");
    if (e.pivot_cols.size() != cols)
        throw std::invalid_argument("solve_in_polys: matrix does not have full column rank");
    PolyVector x(cols, SuperPoly(m.k()));
    for (std::size_t i = 0; i < cols; ++i) {
        try {
            x[e.pivot_cols[i]] = divide_exact(e.a[i][cols], e.det);
        } catch (const InexactDivision&) {
            throw NonPolynomialSolution("solve_in_polys: solution has entry (" + e.a[i][cols].str() + ")/(" +
                                        e.det.str() + ") outside K[X]");
        }
    }
    return x;
}

PolyMatrix columns_matrix(int k, const std::vector<PolyVector>& columns)
{
    if (columns.empty())
        throw std::invalid_argument("columns_matrix: no columns");
    const std::size_t rows = columns.front().size();
    PolyMatrix out(k, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw std::invalid_argument("columns_matrix: ragged columns");
        for (std::size_t i = 0; i < rows; ++i)
            out.set(i, j, columns[j][i]);
    }
    return out;
}

PolyMatrix map_matrix(int k, std::size_t domain_rank, std::size_t codomain_rank,
                      const std::function<PolyVector(std::size_t)>& image_of_basis_vector)
{
    PolyMatrix out(k, codomain_rank, domain_rank);
    for (std::size_t j = 0; j < domain_rank; ++j) {
        PolyVector image = image_of_basis_vector(j);
        if (image.size() != codomain_rank)
            throw std::invalid_argument("map_matrix: image has wrong length");
        for (std::size_t i = 0; i < codomain_rank; ++i)
            out.set(i, j, image[i]);
    }
    return out;
}

}  // namespace m11
