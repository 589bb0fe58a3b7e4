#include "helpers.hpp"

#include "m11/serialize.hpp"

#include <doctest.h>

using namespace m11;
using namespace testing_support;

TEST_CASE("term records")
{
    SuperPoly p = Rational(3, 2) * X(1) * Y(1) * Y(2, true) - C(2);
    nlohmann::json j = to_json(p);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["coeff"] == "3/2");
    CHECK(j[0]["even"] == nlohmann::json({1, 0, 0, 0}));
    CHECK(j[0]["odd"] == nlohmann::json({0, 3}));
    CHECK(j[1]["coeff"] == "-2/1");
    CHECK(j[0].dump().find("\"coeff\"") < j[0].dump().find("\"even\""));
    CHECK(poly_from_json(j, 2) == p);
}

TEST_CASE("round trip on random polynomials")
{
    Rng rng(3);
    for (int k = 1; k <= 3; ++k)
        for (int i = 0; i < 50; ++i) {
            SuperPoly p = random_poly(rng, k, 6);
            CHECK(poly_from_json(nlohmann::json::parse(to_json(p).dump()), k) == p);
        }
}

TEST_CASE("malformed records are rejected")
{
    using nlohmann::json;
    CHECK_THROWS_AS(poly_from_json(json::object(), 2), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(json::parse(R"([{"coeff":"1","even":[0,0]}])"), 2), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(json::parse(R"([{"coeff":"1","even":[0,0],"odd":[]}])"), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(json::parse(R"([{"coeff":"1","even":[0,0,0,0],"odd":[4]}])"), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(json::parse(R"([{"coeff":"1","even":[0,0,0,0],"odd":[1,1]}])"), 2),
                    std::invalid_argument);
    // repeated monomials add up
    CHECK(poly_from_json(json::parse(R"([{"coeff":"1/2","even":[1,0,0,0],"odd":[]},
                                          {"coeff":"1/2","even":[1,0,0,0],"odd":[]}])"),
                         2) == X(1));
}

TEST_CASE("matrix, kernel and verdict documents")
{
    auto g = make_generic(2);
    nlohmann::json m = to_json(g[0]);
    CHECK(m["k"] == 2);
    CHECK(m["entries"][0][1] == to_json(Y(1)));
    CHECK(m["entries"][1][0] == to_json(Y(1, true)));

    nlohmann::json kb = to_json(annihilator_J(2));
    CHECK(kb["rank"] == 1);
    CHECK(kb["dimension"] == 6);
    CHECK(kb["vectors"][0].size() == 6);

    nlohmann::json v = to_json(Verdict{Centrality::central, "alpha[0,0] = 5"});
    CHECK(v.dump() == R"({"verdict":"Central","witness":"alpha[0,0] = 5"})");
}
