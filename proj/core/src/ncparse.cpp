#include "m11/ncparse.hpp"

#include <algorithm>
#include <cctype>

namespace m11 {

NCExpr NCExpr::variable(int r)
{
    if (r < 1)
        throw std::invalid_argument("NCExpr: variable index must be >= 1");
    NCExpr e;
    e.kind = Kind::var;
    e.var = r;
    return e;
}

NCExpr NCExpr::scalar(Rational c)
{
    NCExpr e;
    e.kind = Kind::scalar;
    e.value = std::move(c);
    return e;
}

namespace {

NCExpr with_children(NCExpr::Kind kind, std::vector<NCExpr> children, const char* what)
{
    if (children.size() < 2)
        throw std::invalid_argument(std::string("NCExpr: ") + what + " needs at least two operands");
    NCExpr e;
    e.kind = kind;
    e.children = std::move(children);
    return e;
}

}  // namespace

NCExpr NCExpr::sum(std::vector<NCExpr> terms) { return with_children(Kind::sum, std::move(terms), "sum"); }
NCExpr NCExpr::product(std::vector<NCExpr> factors) { return with_children(Kind::product, std::move(factors), "product"); }
NCExpr NCExpr::bracket(std::vector<NCExpr> args) { return with_children(Kind::bracket, std::move(args), "bracket"); }

NCExpr NCExpr::power(NCExpr base, unsigned n)
{
    NCExpr e;
    e.kind = Kind::power;
    e.exponent = n;
    e.children.push_back(std::move(base));
    return e;
}

int NCExpr::max_variable() const
{
    int best = kind == Kind::var ? var : 0;
    for (const auto& c : children)
        best = std::max(best, c.max_variable());
    return best;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position)
{
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NCExpr parse_all()
    {
        NCExpr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::string digits()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected a natural number", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    static bool starts_factor(char c) { return c == 't' || c == '(' || c == '[' || std::isdigit(static_cast<unsigned char>(c)); }

    static NCExpr negate(NCExpr term)
    {
        if (term.kind == NCExpr::Kind::scalar) {
            term.value = -term.value;
            return term;
        }
        if (term.kind == NCExpr::Kind::product) {
            if (term.children.front().kind == NCExpr::Kind::scalar)
                term.children.front().value = -term.children.front().value;
            else
                term.children.insert(term.children.begin(), NCExpr::scalar(-1));
            return term;
        }
        return NCExpr::product({NCExpr::scalar(-1), std::move(term)});
    }

    NCExpr expr()
    {
        std::vector<NCExpr> terms;
        bool negative = false;
        if (peek() == '-') {
            ++pos_;
            negative = true;
        }
        NCExpr first = term();
        terms.push_back(negative ? negate(std::move(first)) : std::move(first));
        while (true) {
            char c = peek();
            if (c != '+' && c != '-')
                break;
            ++pos_;
            NCExpr t = term();
            terms.push_back(c == '-' ? negate(std::move(t)) : std::move(t));
        }
        return terms.size() == 1 ? std::move(terms.front()) : NCExpr::sum(std::move(terms));
    }

    NCExpr term()
    {
        std::vector<NCExpr> factors;
        factors.push_back(factor());
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                factors.push_back(factor());
            } else if (starts_factor(c)) {
                factors.push_back(factor());
            } else {
                break;
            }
        }
        return factors.size() == 1 ? std::move(factors.front()) : NCExpr::product(std::move(factors));
    }

    NCExpr factor()
    {
        NCExpr b = base();
        if (peek() == '^') {
            ++pos_;
            std::size_t at = pos_;
            std::string n = digits();
            if (n.size() > 9)
                throw ParseError("exponent too large", at);
            return NCExpr::power(std::move(b), static_cast<unsigned>(std::stoul(n)));
        }
        return b;
    }

    NCExpr base()
    {
        char c = peek();
        std::size_t at = pos_;
        if (c == 't') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected variable index after 't'", pos_);
            std::string n = digits();
            if (n.size() > 6 || std::stoi(n) < 1)
                throw ParseError("unknown variable index t" + n, at);
            return NCExpr::variable(std::stoi(n));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit = digits();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw ParseError("expected denominator", pos_);
                std::string den = digits();
                if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; }))
                    throw ParseError("zero denominator", at);
                lit += "/" + den;
            }
            return NCExpr::scalar(Rational::parse(lit));
        }
        if (c == '(') {
            ++pos_;
            NCExpr inner = expr();
            expect(')');
            return inner;
        }
        if (c == '[') {
            ++pos_;
            std::vector<NCExpr> args;
            args.push_back(expr());
            while (peek() == ',') {
                ++pos_;
                args.push_back(expr());
            }
            if (peek() != ']')
                throw ParseError("expected ',' or ']'", pos_);
            ++pos_;
            if (args.size() < 2)
                throw ParseError("bracket needs at least two arguments", at);
            return NCExpr::bracket(std::move(args));
        }
        if (c == '\0')
            throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string print(const NCExpr& e);

// Form usable as a standalone factor inside a product or as a power base.
std::string print_atom(const NCExpr& e)
{
    switch (e.kind) {
    case NCExpr::Kind::var:
    case NCExpr::Kind::bracket:
        return print(e);
    case NCExpr::Kind::scalar:
        return e.value.sign() < 0 ? "(" + print(e) + ")" : print(e);
    default:
        return "(" + print(e) + ")";
    }
}

std::string print_factor(const NCExpr& e)
{
    return e.kind == NCExpr::Kind::power ? print(e) : print_atom(e);
}

std::string print_factors(const NCExpr& e, std::size_t from)
{
    std::string out;
    for (std::size_t i = from; i < e.children.size(); ++i)
        out += (i > from ? " " : "") + print_factor(e.children[i]);
    return out;
}

// Prints e with its sign pulled out; returns (negative, magnitude text).
std::pair<bool, std::string> print_signed(const NCExpr& e)
{
    if (e.kind == NCExpr::Kind::scalar && e.value.sign() < 0)
        return {true, (-e.value).str()};
    if (e.kind == NCExpr::Kind::product) {
        const NCExpr& lead = e.children.front();
        if (lead.kind == NCExpr::Kind::scalar && lead.value.sign() < 0)
            return {true, (-lead.value).str() + " " + print_factors(e, 1)};
        return {false, print_factors(e, 0)};
    }
    if (e.kind == NCExpr::Kind::sum)
        return {false, "(" + print(e) + ")"};
    return {false, print(e)};
}

std::string print(const NCExpr& e)
{
    switch (e.kind) {
    case NCExpr::Kind::var:
        return "t" + std::to_string(e.var);
    case NCExpr::Kind::scalar:
        return e.value.str();
    case NCExpr::Kind::power:
        return print_atom(e.children.front()) + "^" + std::to_string(e.exponent);
    case NCExpr::Kind::product: {
        auto [neg, text] = print_signed(e);
        return neg ? "-" + text : text;
    }
    case NCExpr::Kind::sum: {
        std::string out;
        for (std::size_t i = 0; i < e.children.size(); ++i) {
            auto [neg, text] = print_signed(e.children[i]);
            if (i == 0)
                out += (neg ? "-" : "") + text;
            else
                out += (neg ? " - " : " + ") + text;
        }
        return out;
    }
    case NCExpr::Kind::bracket: {
        std::string out = "[";
        for (std::size_t i = 0; i < e.children.size(); ++i)
            out += (i ? ", " : "") + print(e.children[i]);
        return out + "]";
    }
    }
    return {};
}

}  // namespace

NCExpr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string pretty(const NCExpr& e) { return print(e); }

namespace {

SuperMatrix eval_rec(const NCExpr& e, int k, const std::vector<SuperMatrix>& gens)
{
    switch (e.kind) {
    case NCExpr::Kind::var:
        if (e.var > k)
            throw std::out_of_range("variable t" + std::to_string(e.var) + " exceeds generator count k=" +
                                    std::to_string(k));
        return gens[static_cast<std::size_t>(e.var - 1)];
    case NCExpr::Kind::scalar:
        return SuperMatrix::scalar(k, SuperPoly::constant(k, e.value));
    case NCExpr::Kind::sum: {
        SuperMatrix acc = eval_rec(e.children.front(), k, gens);
        for (std::size_t i = 1; i < e.children.size(); ++i)
            acc += eval_rec(e.children[i], k, gens);
        return acc;
    }
    case NCExpr::Kind::product: {
        SuperMatrix acc = eval_rec(e.children.front(), k, gens);
        for (std::size_t i = 1; i < e.children.size(); ++i)
            acc = acc * eval_rec(e.children[i], k, gens);
        return acc;
    }
    case NCExpr::Kind::power:
        return power(eval_rec(e.children.front(), k, gens), e.exponent);
    case NCExpr::Kind::bracket: {
        SuperMatrix acc = eval_rec(e.children.front(), k, gens);
        for (std::size_t i = 1; i < e.children.size(); ++i)
            acc = commutator(acc, eval_rec(e.children[i], k, gens));
        return acc;
    }
    }
    throw std::logic_error("evaluate: unknown node kind");
}

}  // namespace

SuperMatrix evaluate(const NCExpr& e, int k)
{
    if (e.max_variable() > k)
        throw std::out_of_range("variable t" + std::to_string(e.max_variable()) + " exceeds generator count k=" +
                                std::to_string(k));
    return eval_rec(e, k, make_generic(k));
}

}  // namespace m11
