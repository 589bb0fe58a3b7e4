#include "m11/random.hpp"

#include <limits>
#include <utility>

namespace m11 {

int Rng::uniform(int lo, int hi)
{
    if (hi < lo)
        throw std::invalid_argument("Rng::uniform: empty range");
    const auto range = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t v = engine_();
    while (v >= limit)
        v = engine_();
    return lo + static_cast<int>(v % range);
}

int Rng::nonzero(int bound)
{
    int v = uniform(1, bound);
    return coin() ? v : -v;
}

NCExpr random_nc_polynomial(Rng& rng, int k, int max_degree, int max_terms, int coeff_bound)
{
    std::vector<NCExpr> terms;
    int count = rng.uniform(1, max_terms);
    for (int t = 0; t < count; ++t) {
        int degree = rng.uniform(0, max_degree);
        NCExpr c = NCExpr::scalar(rng.uniform(-coeff_bound, coeff_bound));
        if (degree == 0) {
            terms.push_back(std::move(c));
            continue;
        }
        std::vector<NCExpr> factors{std::move(c)};
        for (int d = 0; d < degree; ++d)
            factors.push_back(NCExpr::variable(rng.uniform(1, k)));
        terms.push_back(NCExpr::product(std::move(factors)));
    }
    return terms.size() == 1 ? std::move(terms.front()) : NCExpr::sum(std::move(terms));
}

NCExpr random_ast(Rng& rng, int k, int depth)
{
    if (depth <= 0 || rng.uniform(0, 3) == 0) {
        if (rng.coin())
            return NCExpr::variable(rng.uniform(1, k));
        int num = rng.uniform(-9, 9);
        int den = rng.uniform(1, 4);
        return NCExpr::scalar(Rational(num, den));
    }
    auto children = [&](int lo, int hi) {
        std::vector<NCExpr> out;
        int n = rng.uniform(lo, hi);
        for (int i = 0; i < n; ++i)
            out.push_back(random_ast(rng, k, depth - 1));
        return out;
    };
    switch (rng.uniform(0, 3)) {
    case 0:
        return NCExpr::sum(children(2, 3));
    case 1:
        return NCExpr::product(children(2, 3));
    case 2:
        return NCExpr::power(random_ast(rng, k, depth - 1), static_cast<unsigned>(rng.uniform(0, 3)));
    default:
        return NCExpr::bracket(children(2, 3));
    }
}

SuperMatrix random_f_element(Rng& rng, int k, int max_degree, int max_terms)
{
    return evaluate(random_nc_polynomial(rng, k, max_degree, max_terms), k);
}

CommWord random_word(Rng& rng, int length)
{
    if (length < 2)
        throw std::invalid_argument("random_word: length must be >= 2");
    CommWord w{{1, 2}};
    for (int i = 2; i < length; ++i)
        w.letters.push_back(rng.uniform(1, 2));
    return w;
}

namespace {

// Same multidegree, middle letters permuted.
CommWord shuffled_middle(Rng& rng, CommWord w)
{
    for (int i = w.length() - 1; i > 2; --i)
        std::swap(w.letters[static_cast<std::size_t>(i)], w.letters[static_cast<std::size_t>(rng.uniform(2, i))]);
    return w;
}

enum class Mode { free, central, strong, broken_group };

void add_cancelling_groups(Rng& rng, CanonicalElement& ce, int max_degree, int budget)
{
    while (budget >= 2) {
        int size = budget >= 3 && rng.coin() ? 3 : 2;
        int len = rng.uniform(2, max_degree);
        int n = rng.uniform(0, max_degree - len);
        int m = rng.uniform(0, max_degree - len - n);
        CommWord base = random_word(rng, len);
        Rational rest(0);
        for (int j = 0; j < size; ++j) {
            Rational beta = j + 1 < size ? Rational(rng.nonzero(5), rng.uniform(1, 3)) : -rest;
            rest += beta;
            ce.single_comm_terms.push_back({n, m, shuffled_middle(rng, base), beta});
        }
        budget -= size;
    }
}

void add_multi_terms(Rng& rng, CanonicalElement& ce, int max_degree, int count)
{
    for (int t = 0; t < count; ++t) {
        int room = max_degree;
        std::vector<CommWord> words;
        int r = room >= 6 && rng.coin() ? 3 : 2;
        for (int i = 0; i < r; ++i) {
            int left_for_others = 2 * (r - i - 1);
            int len = rng.uniform(2, std::max(2, std::min(4, room - left_for_others)));
            words.push_back(random_word(rng, len));
            room -= len;
        }
        int n = room > 0 ? rng.uniform(0, room) : 0;
        int m = room - n > 0 ? rng.uniform(0, room - n) : 0;
        ce.multi_comm_terms.push_back({n, m, std::move(words), Rational(rng.nonzero(5), rng.uniform(1, 3))});
    }
}

CanonicalElement canonical_in_mode(Rng& rng, Mode mode, int max_degree, int max_terms)
{
    CanonicalElement ce;

    if (mode == Mode::free) {
        int powers = rng.uniform(0, max_terms);
        for (int t = 0; t < powers; ++t) {
            int n = rng.uniform(0, max_degree);
            int m = rng.uniform(0, max_degree - n);
            ce.power_terms.push_back({n, m, Rational(rng.nonzero(5), rng.uniform(1, 3))});
        }
        int singles = rng.uniform(0, max_terms);
        for (int t = 0; t < singles; ++t) {
            int len = rng.uniform(2, max_degree);
            int n = rng.uniform(0, max_degree - len);
            int m = rng.uniform(0, max_degree - len - n);
            ce.single_comm_terms.push_back({n, m, random_word(rng, len), Rational(rng.nonzero(5), rng.uniform(1, 3))});
        }
    } else {
        if (mode != Mode::strong && rng.uniform(0, 3) != 0)
            ce.power_terms.push_back({0, 0, Rational(rng.nonzero(5), rng.uniform(1, 3))});
        // Cancelling alpha pairs exercise aggregation without changing the verdict.
        if (rng.coin() && max_terms >= 3) {
            int n = rng.uniform(0, max_degree);
            int m = rng.uniform(0, max_degree - n);
            Rational a(rng.nonzero(5));
            ce.power_terms.push_back({n, m, a});
            ce.power_terms.push_back({n, m, -a});
        }
        add_cancelling_groups(rng, ce, max_degree, rng.uniform(0, max_terms));
        if (mode == Mode::broken_group) {
            int len = rng.uniform(2, max_degree);
            int n = rng.uniform(0, max_degree - len);
            int m = rng.uniform(0, max_degree - len - n);
            if (ce.single_comm_terms.size() < static_cast<std::size_t>(max_terms))
                ce.single_comm_terms.push_back({n, m, random_word(rng, len), Rational(rng.nonzero(5))});
            else
                ce.single_comm_terms.back().beta += Rational(rng.nonzero(5));
        }
    }
    if (max_degree >= 4)
        add_multi_terms(rng, ce, max_degree, rng.uniform(0, max_terms));
    return ce;
}

}  // namespace

CanonicalElement random_canonical(Rng& rng, int max_degree, int max_terms)
{
    return canonical_in_mode(rng, static_cast<Mode>(rng.uniform(0, 3)), max_degree, max_terms);
}

SuperMatrix random_central_element(Rng& rng)
{
    return expand_canonical(canonical_in_mode(rng, Mode::central, 6, 4));
}

SuperMatrix random_strongly_central_element(Rng& rng)
{
    return expand_canonical(canonical_in_mode(rng, Mode::strong, 6, 4));
}

}  // namespace m11
