#include "m11/classify.hpp"

#include <cctype>
#include <map>
#include <tuple>

namespace m11 {

namespace {

void validate_word(const CommWord& w)
{
    w.validate(2);
    if (!w.has_standard_prefix())
        throw std::invalid_argument("canonical element: word " + w.str() + " must begin (1,2)");
}

void validate_prefix(int n, int m)
{
    if (n < 0 || m < 0)
        throw std::invalid_argument("canonical element: negative exponent");
}

std::string monomial_str(int n, int m, const std::vector<CommWord>& words)
{
    std::string out;
    auto add = [&](const std::string& s) { out += (out.empty() ? "" : " ") + s; };
    if (n > 0)
        add(n == 1 ? "C1" : "C1^" + std::to_string(n));
    if (m > 0)
        add(m == 1 ? "C2" : "C2^" + std::to_string(m));
    for (const auto& w : words)
        out += w.str();
    return out;
}

std::string term_line(const Rational& c, int n, int m, const std::vector<CommWord>& words)
{
    std::string mono = monomial_str(n, m, words);
    return mono.empty() ? c.str() : c.str() + " * " + mono;
}

SuperMatrix prefix_power(int n, int m)
{
    SuperMatrix p = n > 0 ? power_closed(1, n) : SuperMatrix::identity(2);
    if (m > 0)
        p = p * power_closed(2, m);
    return p;
}

}  // namespace

void CanonicalElement::validate() const
{
    for (const auto& t : power_terms)
        validate_prefix(t.n, t.m);
    for (const auto& t : single_comm_terms) {
        validate_prefix(t.n, t.m);
        validate_word(t.word);
    }
    for (const auto& t : multi_comm_terms) {
        validate_prefix(t.n, t.m);
        if (t.words.size() < 2)
            throw std::invalid_argument("canonical element: multi-commutator term needs at least two words");
        for (const auto& w : t.words)
            validate_word(w);
    }
}

CanonicalElement CanonicalElement::scaled(const Rational& lambda) const
{
    CanonicalElement out = *this;
    for (auto& t : out.power_terms)
        t.alpha = t.alpha * lambda;
    for (auto& t : out.single_comm_terms)
        t.beta = t.beta * lambda;
    for (auto& t : out.multi_comm_terms)
        t.gamma = t.gamma * lambda;
    return out;
}

std::string CanonicalElement::str() const
{
    std::string out;
    for (const auto& t : power_terms)
        out += term_line(t.alpha, t.n, t.m, {}) + "\n";
    for (const auto& t : single_comm_terms)
        out += term_line(t.beta, t.n, t.m, {t.word}) + "\n";
    for (const auto& t : multi_comm_terms)
        out += term_line(t.gamma, t.n, t.m, t.words) + "\n";
    return out;
}

std::string to_string(Centrality c)
{
    switch (c) {
    case Centrality::not_central:
        return "NotCentral";
    case Centrality::central:
        return "Central";
    case Centrality::strongly_central:
        return "StronglyCentral";
    }
    return "?";
}

Verdict classify(const CanonicalElement& ce)
{
    ce.validate();

    std::map<std::pair<int, int>, Rational> alpha;
    for (const auto& t : ce.power_terms)
        alpha[{t.n, t.m}] += t.alpha;

    std::map<std::tuple<int, int, int, int>, Rational> groups;
    for (const auto& t : ce.single_comm_terms)
        groups[{t.n, t.m, t.word.degree_in(1), t.word.degree_in(2)}] += t.beta;

    for (const auto& [key, a] : alpha) {
        if (key.first + key.second >= 1 && !a.is_zero())
            return {Centrality::not_central, "alpha[" + std::to_string(key.first) + "," + std::to_string(key.second) +
                                                 "] = " + a.str()};
    }
    for (const auto& [key, b] : groups) {
        if (!b.is_zero()) {
            auto [n, m, r, s] = key;
            return {Centrality::not_central, "beta-sum[n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                                                 ",deg=(" + std::to_string(r) + "," + std::to_string(s) +
                                                 ")] = " + b.str()};
        }
    }
    auto it = alpha.find({0, 0});
    if (it != alpha.end() && !it->second.is_zero())
        return {Centrality::central, "alpha[0,0] = " + it->second.str()};
    return {Centrality::strongly_central, ""};
}

SuperMatrix expand_canonical(const CanonicalElement& ce)
{
    ce.validate();
    SuperMatrix acc(2);
    for (const auto& t : ce.power_terms)
        acc += t.alpha * prefix_power(t.n, t.m);
    for (const auto& t : ce.single_comm_terms)
        acc += t.beta * (prefix_power(t.n, t.m) * comm_closed(t.word));
    for (const auto& t : ce.multi_comm_terms) {
        SuperMatrix prod = prefix_power(t.n, t.m);
        for (const auto& w : t.words)
            prod = prod * comm_closed(w);
        acc += t.gamma * prod;
    }
    return acc;
}

Verdict verdict_of_matrix(const SuperMatrix& m)
{
    if (!is_central(m, 2))
        return {Centrality::not_central, "does not commute with C1, C2"};
    auto c = m.constant_term();
    if (!c[0].is_zero())
        return {Centrality::central, "constant term " + c[0].str()};
    return {Centrality::strongly_central, ""};
}

namespace {

void check_comm_sum(const std::vector<SuperPoly>& coeffs, const std::vector<CommWord>& words)
{
    if (coeffs.empty() || coeffs.size() != words.size())
        throw std::invalid_argument("comm sum: need one coefficient per word and at least one word");
    for (const auto& w : words)
        validate_word(w);
    int r = words.front().degree_in(1);
    int s = words.front().degree_in(2);
    for (const auto& w : words)
        if (w.degree_in(1) != r || w.degree_in(2) != s)
            throw std::invalid_argument("comm sum: mixed multidegrees");
    for (const auto& c : coeffs) {
        if (c.k() != 0 && c.k() != 2)
            throw ContextMismatch(c.k(), 2);
        for (int n = 1; n <= 3; n += 2)
            if (!c.is_zero() && !component(c, n).is_zero())
                throw std::invalid_argument("comm sum: coefficient " + c.str() + " has odd Z-degree part");
    }
}

}  // namespace

Verdict classify_comm_sum(const std::vector<SuperPoly>& coeffs, const std::vector<CommWord>& words)
{
    check_comm_sum(coeffs, words);
    SuperPoly total = SuperPoly::constant(2, 0);
    for (const auto& c : coeffs)
        total += c;
    for (int n = 0; n <= 2; n += 2) {
        SuperPoly part = component(total, n);
        if (!part.is_zero())
            return {Centrality::not_central, "coefficient sum has degree-" + std::to_string(n) + " part " + part.str()};
    }
    return {Centrality::strongly_central, ""};
}

SuperMatrix expand_comm_sum(const std::vector<SuperPoly>& coeffs, const std::vector<CommWord>& words)
{
    check_comm_sum(coeffs, words);
    SuperMatrix acc(2);
    for (std::size_t j = 0; j < words.size(); ++j)
        acc += coeffs[j] * comm_closed(words[j]);
    return acc;
}

CanonicalParseError::CanonicalParseError(const std::string& message, int line)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
{
}

namespace {

class LineParser {
public:
    LineParser(std::string_view text, int line) : s_(text), line_(line) {}

    // Returns false for a blank line.
    bool parse(CanonicalElement& out)
    {
        skip_ws();
        if (done())
            return false;

        Rational coeff(1);
        bool sign_seen = false;
        if (s_[pos_] == '+' || s_[pos_] == '-') {
            if (s_[pos_] == '-')
                coeff = Rational(-1);
            sign_seen = true;
            ++pos_;
            skip_ws();
        }
        bool coeff_seen = false;
        if (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::string lit = digits();
            if (!done() && s_[pos_] == '/') {
                ++pos_;
                lit += "/" + digits();
            }
            try {
                coeff = coeff * Rational::parse(lit);
            } catch (const std::exception& e) {
                fail(std::string("bad coefficient: ") + e.what());
            }
            coeff_seen = true;
            skip_ws();
            if (!done() && s_[pos_] == '*') {
                ++pos_;
                skip_ws();
                if (done())
                    fail("expected monomial after '*'");
            }
        }

        int n = 0;
        int m = 0;
        bool c1_seen = false;
        bool c2_seen = false;
        while (!done() && s_[pos_] == 'C') {
            ++pos_;
            if (done() || (s_[pos_] != '1' && s_[pos_] != '2'))
                fail("expected C1 or C2");
            char which = s_[pos_++];
            int e = 1;
            skip_ws();
            if (!done() && s_[pos_] == '^') {
                ++pos_;
                e = std::stoi(digits());
            }
            if (which == '1') {
                if (c1_seen || c2_seen)
                    fail("C1 must appear at most once and before C2");
                c1_seen = true;
                n = e;
            } else {
                if (c2_seen)
                    fail("C2 must appear at most once");
                c2_seen = true;
                m = e;
            }
            skip_ws();
        }

        std::vector<CommWord> words;
        while (!done() && s_[pos_] == '[') {
            ++pos_;
            CommWord w;
            while (true) {
                w.letters.push_back(std::stoi(digits()));
                skip_ws();
                if (done())
                    fail("unterminated word");
                if (s_[pos_] == ']') {
                    ++pos_;
                    break;
                }
                if (s_[pos_] != ',')
                    fail("expected ',' or ']' in word");
                ++pos_;
            }
            try {
                validate_word(w);
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
            words.push_back(std::move(w));
            skip_ws();
        }
        if (!done())
            fail(std::string("unexpected '") + s_[pos_] + "'");
        if (!coeff_seen && !c1_seen && !c2_seen && words.empty())
            fail(sign_seen ? "sign without a term" : "empty term");

        if (words.empty())
            out.power_terms.push_back({n, m, coeff});
        else if (words.size() == 1)
            out.single_comm_terms.push_back({n, m, words.front(), coeff});
        else
            out.multi_comm_terms.push_back({n, m, std::move(words), coeff});
        return true;
    }

private:
    [[nodiscard]] bool done() const { return pos_ >= s_.size(); }

    void skip_ws()
    {
        while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    std::string digits()
    {
        skip_ws();
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a natural number");
        if (pos_ - start > 9)
            fail("number too large");
        return std::string(s_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& message) const { throw CanonicalParseError(message, line_); }

    std::string_view s_;
    int line_;
    std::size_t pos_ = 0;
};

}  // namespace

CanonicalElement parse_canonical(std::string_view text)
{
    CanonicalElement out;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        LineParser(line, line_no).parse(out);
        start = end + 1;
    }
    return out;
}

}  // namespace m11
