#pragma once

#include "m11/generic.hpp"
#include "m11/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace m11 {

/// Noncommutative polynomial expression over t_1, t_2, ...
///
/// Sum, Product and Bracket nodes carry at least two children; Power carries
/// exactly one. Brackets are left-normed: [a, b, c] = [[a, b], c].
struct NCExpr {
    enum class Kind { var, scalar, sum, product, power, bracket };

    Kind kind = Kind::scalar;
    int var = 0;            ///< 1-based, Kind::var only
    Rational value;         ///< Kind::scalar only
    unsigned exponent = 0;  ///< Kind::power only
    std::vector<NCExpr> children;

    static NCExpr variable(int r);
    static NCExpr scalar(Rational c);
    static NCExpr sum(std::vector<NCExpr> terms);
    static NCExpr product(std::vector<NCExpr> factors);
    static NCExpr power(NCExpr base, unsigned n);
    static NCExpr bracket(std::vector<NCExpr> args);

    /// Largest variable index used, 0 if none.
    [[nodiscard]] int max_variable() const;

    friend bool operator==(const NCExpr&, const NCExpr&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Grammar (whitespace-insensitive):
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor (['*'] factor)*
///   factor := base ['^' nat]
///   base   := 't' nat | nat ['/' nat] | '(' expr ')' | '[' expr (',' expr)+ ']'
/// A minus sign folds into a leading scalar of the term it negates.
NCExpr parse(std::string_view text);

/// Canonical text form; parse(pretty(e)) == e.
std::string pretty(const NCExpr& e);

/// Homomorphic image under t_r -> C_r in the k-generator context. Throws
/// std::out_of_range when a variable exceeds k.
SuperMatrix evaluate(const NCExpr& e, int k);

}  // namespace m11
