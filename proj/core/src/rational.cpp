#include "m11/rational.hpp"

#include <functional>
#include <limits>

namespace m11 {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b)
{
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 v)
{
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(std::int64_t v)
{
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

mpz_class to_mpz(i128 v)
{
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
    mpz_class lo;
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d)
{
    if (d == 0)
        throw std::invalid_argument("Rational: zero denominator");
    i128 nn = n, dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    u128 g = gcd128(uabs(nn), uabs(dd));
    if (g > 1) {
        nn /= static_cast<i128>(g);
        dd /= static_cast<i128>(g);
    }
    if (fits64(nn) && fits64(dd)) {
        num_ = static_cast<std::int64_t>(nn);
        den_ = static_cast<std::int64_t>(dd);
    } else {
        assign_big(mpq_class(to_mpz(nn), to_mpz(dd)));
    }
}

Rational::Rational(const mpq_class& q)
{
    mpq_class c(q);
    c.canonicalize();
    assign_big(std::move(c));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr)
{
}

Rational& Rational::operator=(const Rational& other)
{
    if (this == &other)
        return *this;
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    return *this;
}

void Rational::assign_big(mpq_class q)
{
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
        num_ = mpz_get_si(n.get_mpz_t());
        den_ = mpz_get_si(d.get_mpz_t());
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
}

Rational Rational::parse(std::string_view text)
{
    auto parse_int = [](std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("Rational: empty integer");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size())
            throw std::invalid_argument("Rational: missing digits");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("Rational: bad digit in '" + std::string(s) + "'");
        std::string owned(s[0] == '+' ? s.substr(1) : s);
        return mpz_class(owned, 10);
    };
    auto slash = text.find('/');
    mpz_class n = parse_int(text.substr(0, slash));
    mpz_class d = 1;
    if (slash != std::string_view::npos) {
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
            throw std::invalid_argument("Rational: signed denominator");
        d = parse_int(den_text);
    }
    if (d == 0)
        throw std::invalid_argument("Rational: zero denominator");
    return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const
{
    if (big_)
        return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : to_mpz(num_); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : to_mpz(den_); }
mpq_class Rational::to_mpq() const { return big_ ? *big_ : mpq_class(to_mpz(num_), to_mpz(den_)); }

std::string Rational::str() const
{
    if (big_)
        return big_->get_str();
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::fraction_str() const
{
    if (big_)
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const
{
    if (big_)
        return std::hash<std::string>{}(big_->get_str());
    return std::hash<std::int64_t>{}(num_) * 0x9e3779b97f4a7c15ULL ^ std::hash<std::int64_t>{}(den_);
}

Rational Rational::operator-() const
{
    if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return Rational(mpq_class(-to_mpq()));
}

Rational& Rational::operator+=(const Rational& rhs)
{
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t out;
            if (!__builtin_add_overflow(num_, rhs.num_, &out)) {
                num_ = out;
                return *this;
            }
        }
        u128 g = gcd128(static_cast<u128>(den_), static_cast<u128>(rhs.den_));
        i128 b = den_, d = rhs.den_;
        i128 n = static_cast<i128>(num_) * (d / static_cast<i128>(g)) + static_cast<i128>(rhs.num_) * (b / static_cast<i128>(g));
        i128 den = b * (d / static_cast<i128>(g));
        u128 h = gcd128(uabs(n), static_cast<u128>(den));
        if (h > 1) {
            n /= static_cast<i128>(h);
            den /= static_cast<i128>(h);
        }
        if (n == 0)
            den = 1;
        if (fits64(n) && fits64(den)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(den);
            return *this;
        }
        assign_big(mpq_class(to_mpz(n), to_mpz(den)));
        return *this;
    }
    assign_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs)
{
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t out;
            if (!__builtin_mul_overflow(num_, rhs.num_, &out)) {
                num_ = out;
                return *this;
            }
        }
        i128 a = num_, b = den_, c = rhs.num_, d = rhs.den_;
        u128 g1 = gcd128(uabs(a), uabs(d));
        u128 g2 = gcd128(uabs(c), uabs(b));
        if (g1 > 1) {
            a /= static_cast<i128>(g1);
            d /= static_cast<i128>(g1);
        }
        if (g2 > 1) {
            c /= static_cast<i128>(g2);
            b /= static_cast<i128>(g2);
        }
        i128 n = a * c;
        i128 den = b * d;
        if (n == 0)
            den = 1;
        if (fits64(n) && fits64(den)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(den);
            return *this;
        }
        assign_big(mpq_class(to_mpz(n), to_mpz(den)));
        return *this;
    }
    assign_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("Rational: division by zero");
    if (!rhs.big_ && rhs.num_ != std::numeric_limits<std::int64_t>::min()) {
        Rational inv;
        inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
        inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
        return *this *= inv;
    }
    assign_big(to_mpq() / rhs.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_)
        return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_)
        return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        i128 lhs = static_cast<i128>(a.num_) * b.den_;
        i128 rhs = static_cast<i128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

Rational rational_gcd(const Rational& a, const Rational& b)
{
    mpz_class n, d;
    mpz_gcd(n.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(d.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rational(mpq_class(n, d));
}

}  // namespace m11
