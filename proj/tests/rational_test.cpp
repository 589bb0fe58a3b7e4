#include "m11/rational.hpp"

#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>

using m11::Rational;

TEST_CASE("rational parse and print")
{
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(4, 2).fraction_str() == "2/1");
    CHECK(Rational(0).fraction_str() == "0/1");
    CHECK(Rational(1, -3).str() == "-1/3");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational huge literals")
{
    Rational big = Rational::parse("123456789012345678901234567891/7");
    CHECK(big.str() == "123456789012345678901234567891/7");
    CHECK(Rational::parse("123456789012345678901234567890/7").str() == "17636684144620811271604938270");
    CHECK((big - big).is_zero());
    CHECK((big / big).is_one());
}

TEST_CASE("rational arithmetic matches mpq, including int64 overflow")
{
    std::mt19937_64 gen(7);
    const std::int64_t edges[] = {0,
                                  1,
                                  -1,
                                  std::numeric_limits<std::int64_t>::max(),
                                  std::numeric_limits<std::int64_t>::min() + 1,
                                  std::numeric_limits<std::int64_t>::max() / 3,
                                  (std::int64_t{1} << 40) + 17};
    auto draw = [&](int i) -> std::int64_t {
        if (i % 3 == 0)
            return edges[gen() % std::size(edges)];
        return static_cast<std::int64_t>(gen() % 2000001) - 1000000;
    };
    for (int i = 0; i < 3000; ++i) {
        std::int64_t an = draw(i), bn = draw(i + 1);
        std::int64_t ad = draw(i + 2), bd = draw(i);
        if (ad == 0)
            ad = 1;
        if (bd == 0)
            bd = 3;
        Rational a(an, ad), b(bn, bd);
        mpq_class qa(mpz_class(std::to_string(an)), mpz_class(std::to_string(ad)));
        mpq_class qb(mpz_class(std::to_string(bn)), mpz_class(std::to_string(bd)));
        qa.canonicalize();
        qb.canonicalize();
        REQUIRE(a.to_mpq() == qa);
        CHECK((a + b).to_mpq() == qa + qb);
        CHECK((a - b).to_mpq() == qa - qb);
        CHECK((a * b).to_mpq() == qa * qb);
        if (bn != 0)
            CHECK((a / b).to_mpq() == qa / qb);
        CHECK((a < b) == (qa < qb));
        CHECK((a == b) == (qa == qb));
        // canonical representation: equal values hash equally
        Rational c = (a + b) - b;
        CHECK(c == a);
        CHECK(c.hash() == a.hash());
    }
}

TEST_CASE("rational demotes back to the inline range")
{
    Rational big(std::numeric_limits<std::int64_t>::max());
    Rational p = big * big;
    Rational q = p / big;
    CHECK(q == big);
    CHECK(q.hash() == big.hash());
    CHECK(q.str() == std::to_string(std::numeric_limits<std::int64_t>::max()));
}

TEST_CASE("rational gcd")
{
    CHECK(m11::rational_gcd(Rational(4, 3), Rational(6, 5)) == Rational(2, 15));
    CHECK(m11::rational_gcd(Rational(0), Rational(-6)) == Rational(6));
}
