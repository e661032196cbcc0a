#ifndef FOLINT_EXPR_HPP
#define FOLINT_EXPR_HPP

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "folint/darboux.hpp"
#include "folint/ratfun.hpp"

namespace folint {

// Concrete syntax:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' posint)?
//   atom   := number | variable | '(' expr ')' | '-' atom | 'exp' '(' expr ')'
// Implicit multiplication is not accepted; whitespace is insignificant.
struct Expr {
    enum class Kind { Number, Variable, Add, Sub, Mul, Div, Neg, Pow, ExpOf };

    Kind kind = Kind::Number;
    mpz_class number;          // Kind::Number
    std::string var;           // Kind::Variable
    unsigned exponent = 0;     // Kind::Pow
    std::vector<Expr> children;

    static Expr make_number(mpz_class n);
    static Expr make_variable(std::string v);
    static Expr make_unary(Kind k, Expr child);
    static Expr make_binary(Kind k, Expr lhs, Expr rhs);
    static Expr make_pow(Expr base, unsigned e);

    bool operator==(const Expr& o) const;
    bool operator!=(const Expr& o) const { return !(*this == o); }
};

// Throws parse_error (with byte offset) on lexical/syntactic failure,
// on names outside `vars`, and on non-positive or non-integer exponents.
Expr parse_expression(const std::string& text, const VarSet& vars);

// Minimal-parenthesis rendering; parse_expression(print_expression(e)) == e.
std::string print_expression(const Expr& e);

using LoweredValue = std::variant<MPoly, RationalFunction, DarbouxFunction>;

// Polynomial when the tree has no '/' or 'exp', rational function when it has
// '/' only, Darboux function otherwise. Shapes that do not reduce to
// R*exp(S) with rational R, S raise structural_error naming the node path.
LoweredValue lower_to_semantics(const Expr& e, const VarSet& vars);

// Conveniences over lower_to_semantics.
MPoly parse_polynomial(const std::string& text, const VarSet& vars);
RationalFunction parse_rational(const std::string& text, const VarSet& vars);
DarbouxFunction parse_darboux(const std::string& text, const VarSet& vars);

}  // namespace folint

#endif
