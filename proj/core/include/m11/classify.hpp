#pragma once

#include "m11/generic.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace m11 {

/// alpha · C1^n C2^m
struct PowerTerm {
    int n = 0;
    int m = 0;
    Rational alpha;
    friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

/// C1^n C2^m · beta · u, u a single commutator word with prefix (1, 2).
struct SingleCommTerm {
    int n = 0;
    int m = 0;
    CommWord word;
    Rational beta;
    friend bool operator==(const SingleCommTerm&, const SingleCommTerm&) = default;
};

/// gamma · C1^n C2^m · u_1 ... u_r with r >= 2.
struct MultiCommTerm {
    int n = 0;
    int m = 0;
    std::vector<CommWord> words;
    Rational gamma;
    friend bool operator==(const MultiCommTerm&, const MultiCommTerm&) = default;
};

/// Element of F written in the ordered shape C1^n C2^m u_1 ... u_r over k = 2.
struct CanonicalElement {
    std::vector<PowerTerm> power_terms;
    std::vector<SingleCommTerm> single_comm_terms;
    std::vector<MultiCommTerm> multi_comm_terms;

    /// Throws std::invalid_argument on negative exponents, words that are not
    /// over {1, 2} with prefix (1, 2), or multi terms with fewer than two words.
    void validate() const;
    [[nodiscard]] CanonicalElement scaled(const Rational& lambda) const;
    /// One term per line in the format accepted by parse_canonical.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const CanonicalElement&, const CanonicalElement&) = default;
};

enum class Centrality { not_central, central, strongly_central };

std::string to_string(Centrality c);

struct Verdict {
    Centrality kind = Centrality::not_central;
    /// First violated condition; empty only for StronglyCentral.
    std::string witness;
};

/// Structural test on the coefficients: central iff alpha_nm = 0 whenever
/// n + m >= 1 and every group of single-commutator terms sharing
/// (n, m, deg_1 u, deg_2 u) has zero beta-sum; strongly central iff also
/// alpha_00 = 0.
Verdict classify(const CanonicalElement& ce);

/// Evaluates the canonical form in F using the closed forms.
SuperMatrix expand_canonical(const CanonicalElement& ce);

/// Verdict from direct evaluation: is_central, then the constant term.
Verdict verdict_of_matrix(const SuperMatrix& m);

/// sum_j c_j · u_j for words of one multidegree and coefficients of even
/// Z-degree. Strongly central iff sum_j c_j lies in Z-degree 4; never returns
/// bare Central.
Verdict classify_comm_sum(const std::vector<SuperPoly>& coeffs, const std::vector<CommWord>& words);

/// Evaluation of sum_j c_j · u_j, for cross-checking classify_comm_sum.
SuperMatrix expand_comm_sum(const std::vector<SuperPoly>& coeffs, const std::vector<CommWord>& words);

class CanonicalParseError : public std::runtime_error {
public:
    CanonicalParseError(const std::string& message, int line);
    [[nodiscard]] int line() const { return line_; }

private:
    int line_;
};

/// Canonical-element text format, one term per line:
///   term  := [sign] [rational ['*']] [C1['^'nat]] [C2['^'nat]] word*
///   word  := '[' nat (',' nat)* ']'
/// A missing coefficient means 1. No words gives a power term, one word a
/// single-commutator term, two or more a multi-commutator term. Blank lines
/// and everything after '#' are ignored.
CanonicalElement parse_canonical(std::string_view text);

}  // namespace m11
