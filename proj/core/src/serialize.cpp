#include "m11/serialize.hpp"

namespace m11 {

using nlohmann::json;

json to_json(const SuperPoly& p)
{
    json terms = json::array();
    const int k = p.k();
    for (const auto& t : p.terms()) {
        json even = json::array();
        for (int s = 0; s < 2 * k; ++s)
            even.push_back(t.mono.exponents[static_cast<std::size_t>(s)]);
        json odd = json::array();
        for (int b = 0; b < 2 * k; ++b)
            if (t.mono.odd & (OddMask{1} << b))
                odd.push_back(b);
        terms.push_back({{"coeff", t.coeff.fraction_str()}, {"even", even}, {"odd", odd}});
    }
    return terms;
}

SuperPoly poly_from_json(const json& j, int k)
{
    if (!j.is_array())
        throw std::invalid_argument("poly_from_json: expected an array of term records");
    SuperPoly acc = SuperPoly::constant(k, 0);
    for (const auto& rec : j) {
        if (!rec.is_object() || !rec.contains("coeff") || !rec.contains("even") || !rec.contains("odd"))
            throw std::invalid_argument("poly_from_json: term record needs coeff, even and odd");
        const auto& even = rec.at("even");
        if (!even.is_array() || even.size() != static_cast<std::size_t>(2 * k))
            throw std::invalid_argument("poly_from_json: even exponent list must have 2k entries");
        Monomial m;
        for (int s = 0; s < 2 * k; ++s) {
            auto e = even[static_cast<std::size_t>(s)].get<int>();
            if (e < 0 || e > 0xFFFF)
                throw std::invalid_argument("poly_from_json: exponent out of range");
            m.exponents[static_cast<std::size_t>(s)] = static_cast<std::uint16_t>(e);
            m.degree = static_cast<std::uint16_t>(m.degree + e);
        }
        for (const auto& b : rec.at("odd")) {
            int bit = b.get<int>();
            if (bit < 0 || bit >= 2 * k || (m.odd & (OddMask{1} << bit)))
                throw std::invalid_argument("poly_from_json: bad odd index");
            m.odd |= OddMask{1} << bit;
        }
        acc += SuperPoly::monomial(k, m, Rational::parse(rec.at("coeff").get<std::string>()));
    }
    return acc;
}

json to_json(const SuperMatrix& m)
{
    return {{"entries", {{to_json(m.at(0, 0)), to_json(m.at(0, 1))}, {to_json(m.at(1, 0)), to_json(m.at(1, 1))}}},
            {"k", m.k()}};
}

json to_json(const KernelBasis& kb)
{
    json vectors = json::array();
    for (const auto& v : kb.vectors) {
        json entries = json::array();
        for (const auto& e : v)
            entries.push_back(e.str());
        vectors.push_back(entries);
    }
    return {{"dimension", kb.dimension}, {"rank", kb.rank()}, {"vectors", vectors}};
}

json to_json(const Verdict& v)
{
    return {{"verdict", to_string(v.kind)}, {"witness", v.witness}};
}

}  // namespace m11
