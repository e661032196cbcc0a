#include "folint/expr.hpp"

#include <cctype>

namespace folint {

Expr Expr::make_number(mpz_class n) {
    Expr e;
    e.kind = Kind::Number;
    e.number = std::move(n);
    return e;
}

Expr Expr::make_variable(std::string v) {
    Expr e;
    e.kind = Kind::Variable;
    e.var = std::move(v);
    return e;
}

Expr Expr::make_unary(Kind k, Expr child) {
    Expr e;
    e.kind = k;
    e.children.push_back(std::move(child));
    return e;
}

Expr Expr::make_binary(Kind k, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = k;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
}

Expr Expr::make_pow(Expr base, unsigned exp) {
    if (exp == 0) throw structural_error("power nodes carry positive exponents");
    Expr e;
    e.kind = Kind::Pow;
    e.exponent = exp;
    e.children.push_back(std::move(base));
    return e;
}

bool Expr::operator==(const Expr& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Number: return number == o.number;
        case Kind::Variable: return var == o.var;
        case Kind::Pow:
            return exponent == o.exponent && children[0] == o.children[0];
        default: break;
    }
    if (children.size() != o.children.size()) return false;
    for (std::size_t i = 0; i < children.size(); ++i)
        if (!(children[i] == o.children[i])) return false;
    return true;
}

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw parse_error(pos, std::string("expected '") + c + "' " + what);
    }
};

struct Parser {
    Lexer lx;
    const VarSet& vars;

    Expr parse() {
        if (lx.eof()) throw parse_error(0, "empty expression");
        Expr e = expr();
        if (!lx.eof()) throw parse_error(lx.pos, "trailing input");
        return e;
    }

    Expr expr() {
        Expr lhs = term();
        while (true) {
            if (lx.accept('+'))
                lhs = Expr::make_binary(Expr::Kind::Add, std::move(lhs), term());
            else if (lx.accept('-'))
                lhs = Expr::make_binary(Expr::Kind::Sub, std::move(lhs), term());
            else
                return lhs;
        }
    }

    Expr term() {
        Expr lhs = factor();
        while (true) {
            if (lx.accept('*'))
                lhs = Expr::make_binary(Expr::Kind::Mul, std::move(lhs), factor());
            else if (lx.accept('/'))
                lhs = Expr::make_binary(Expr::Kind::Div, std::move(lhs), factor());
            else
                return lhs;
        }
    }

    Expr factor() {
        Expr base = atom();
        if (lx.accept('^')) {
            std::size_t at = lx.pos;
            lx.skip_ws();
            if (lx.pos >= lx.text.size() ||
                !std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
                throw parse_error(at, "exponent must be a positive integer literal");
            mpz_class n = number_literal();
            if (n <= 0) throw parse_error(at, "exponent must be positive");
            if (n > 1000000) throw parse_error(at, "exponent out of range");
            return Expr::make_pow(std::move(base), n.get_ui());
        }
        return base;
    }

    Expr atom() {
        char c = lx.peek();
        std::size_t at = lx.pos;
        if (c == '(') {
            ++lx.pos;
            Expr e = expr();
            lx.expect(')', "to close parenthesis");
            return e;
        }
        if (c == '-') {
            ++lx.pos;
            return Expr::make_unary(Expr::Kind::Neg, atom());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Expr::make_number(number_literal());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id = identifier();
            if (id == "exp") {
                lx.expect('(', "after exp");
                Expr inner = expr();
                lx.expect(')', "to close exp");
                return Expr::make_unary(Expr::Kind::ExpOf, std::move(inner));
            }
            if (!vars.has(id))
                throw parse_error(at, "unknown variable '" + id + "' (variables: " + vars.str() + ")");
            return Expr::make_variable(std::move(id));
        }
        if (c == '\0') throw parse_error(at, "unexpected end of input");
        throw parse_error(at, std::string("unexpected character '") + c + "'");
    }

    mpz_class number_literal() {
        lx.skip_ws();
        std::size_t start = lx.pos;
        while (lx.pos < lx.text.size() &&
               std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
            ++lx.pos;
        return mpz_class(lx.text.substr(start, lx.pos - start));
    }

    std::string identifier() {
        lx.skip_ws();
        std::size_t start = lx.pos;
        while (lx.pos < lx.text.size() &&
               (std::isalnum(static_cast<unsigned char>(lx.text[lx.pos])) ||
                lx.text[lx.pos] == '_'))
            ++lx.pos;
        return lx.text.substr(start, lx.pos - start);
    }
};

}  // namespace

Expr parse_expression(const std::string& text, const VarSet& vars) {
    Parser p{Lexer{text}, vars};
    return p.parse();
}

namespace {

// Grammar levels for parenthesis placement while printing.
enum Level { LvExpr = 0, LvTerm = 1, LvFactor = 2, LvAtom = 3 };

Level level_of(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return LvExpr;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return LvTerm;
        case Expr::Kind::Pow: return LvFactor;
        default: return LvAtom;
    }
}

void print_rec(std::string& out, const Expr& e, Level need) {
    bool paren = level_of(e) < need;
    if (paren) out += "(";
    switch (e.kind) {
        case Expr::Kind::Number: out += e.number.get_str(); break;
        case Expr::Kind::Variable: out += e.var; break;
        case Expr::Kind::Add:
            print_rec(out, e.children[0], LvExpr);
            out += " + ";
            print_rec(out, e.children[1], LvTerm);
            break;
        case Expr::Kind::Sub:
            print_rec(out, e.children[0], LvExpr);
            out += " - ";
            print_rec(out, e.children[1], LvTerm);
            break;
        case Expr::Kind::Mul:
            print_rec(out, e.children[0], LvTerm);
            out += "*";
            print_rec(out, e.children[1], LvFactor);
            break;
        case Expr::Kind::Div:
            print_rec(out, e.children[0], LvTerm);
            out += "/";
            print_rec(out, e.children[1], LvFactor);
            break;
        case Expr::Kind::Neg:
            out += "-";
            print_rec(out, e.children[0], LvAtom);
            break;
        case Expr::Kind::Pow: {
            // The base must be a plain atom; a negated atom base would
            // reassociate ("-x^2" parses as (-x)^2), so force parens there.
            const Expr& base = e.children[0];
            bool base_paren = level_of(base) < LvAtom || base.kind == Expr::Kind::Neg;
            if (base_paren) out += "(";
            print_rec(out, base, LvExpr);
            if (base_paren) out += ")";
            out += "^" + std::to_string(e.exponent);
            break;
        }
        case Expr::Kind::ExpOf:
            out += "exp(";
            print_rec(out, e.children[0], LvExpr);
            out += ")";
            break;
    }
    if (paren) out += ")";
}

}  // namespace

std::string print_expression(const Expr& e) {
    std::string out;
    print_rec(out, e, LvExpr);
    return out;
}

namespace {

bool contains_kind(const Expr& e, Expr::Kind k) {
    if (e.kind == k) return true;
    for (const auto& c : e.children)
        if (contains_kind(c, k)) return true;
    return false;
}

void check_exp_nesting(const Expr& e, bool inside_exp, const std::string& path) {
    if (e.kind == Expr::Kind::ExpOf) {
        if (inside_exp)
            throw structural_error("nested exp at node " + path);
        inside_exp = true;
    }
    for (std::size_t i = 0; i < e.children.size(); ++i)
        check_exp_nesting(e.children[i], inside_exp, path + "." + std::to_string(i));
}

// Value R*e^S carried through lowering.
struct DVal {
    RationalFunction r, s;
};

DVal lower_rec(const Expr& e, const VarSet& vars, const std::string& path) {
    auto err = [&](const std::string& msg) {
        return structural_error("unsupported form at node " + path + ": " + msg);
    };
    switch (e.kind) {
        case Expr::Kind::Number:
            return {RationalFunction::constant(vars, Rat(mpz_class(e.number), mpz_class(1))),
                    RationalFunction::zero(vars)};
        case Expr::Kind::Variable:
            return {RationalFunction(MPoly::variable(vars, e.var)), RationalFunction::zero(vars)};
        case Expr::Kind::Neg: {
            DVal c = lower_rec(e.children[0], vars, path + ".0");
            return {-c.r, std::move(c.s)};
        }
        case Expr::Kind::Add:
        case Expr::Kind::Sub: {
            DVal a = lower_rec(e.children[0], vars, path + ".0");
            DVal b = lower_rec(e.children[1], vars, path + ".1");
            // Sums mix exponentials only when one side vanishes.
            if (a.r.is_zero()) a.s = RationalFunction::zero(vars);
            if (b.r.is_zero()) b.s = RationalFunction::zero(vars);
            if (a.r.is_zero()) a.s = b.s;
            if (b.r.is_zero()) b.s = a.s;
            if (a.s != b.s) throw err("sum of terms with different exponential parts");
            RationalFunction r = e.kind == Expr::Kind::Add ? a.r + b.r : a.r - b.r;
            if (r.is_zero()) return {std::move(r), RationalFunction::zero(vars)};
            return {std::move(r), std::move(a.s)};
        }
        case Expr::Kind::Mul: {
            DVal a = lower_rec(e.children[0], vars, path + ".0");
            DVal b = lower_rec(e.children[1], vars, path + ".1");
            return {a.r * b.r, a.s + b.s};
        }
        case Expr::Kind::Div: {
            DVal a = lower_rec(e.children[0], vars, path + ".0");
            DVal b = lower_rec(e.children[1], vars, path + ".1");
            if (b.r.is_zero()) throw err("division by zero");
            return {a.r / b.r, a.s - b.s};
        }
        case Expr::Kind::Pow: {
            DVal c = lower_rec(e.children[0], vars, path + ".0");
            long k = static_cast<long>(e.exponent);
            return {c.r.pow(k), c.s * RationalFunction::constant(vars, Rat(k))};
        }
        case Expr::Kind::ExpOf: {
            DVal c = lower_rec(e.children[0], vars, path + ".0");
            if (!c.s.is_zero()) throw err("exp of a non-rational argument");
            return {RationalFunction::constant(vars, Rat(1)), std::move(c.r)};
        }
    }
    throw err("unreachable");
}

}  // namespace

LoweredValue lower_to_semantics(const Expr& e, const VarSet& vars) {
    check_exp_nesting(e, false, "root");
    DVal v = lower_rec(e, vars, "root");
    if (contains_kind(e, Expr::Kind::ExpOf)) {
        if (v.r.is_zero()) throw structural_error("Darboux expression with zero prefactor");
        return DarbouxFunction(std::move(v.r), std::move(v.s));
    }
    if (contains_kind(e, Expr::Kind::Div)) return std::move(v.r);
    // With no '/' and no 'exp' the value is an honest polynomial.
    return v.r.num();
}

MPoly parse_polynomial(const std::string& text, const VarSet& vars) {
    LoweredValue v = lower_to_semantics(parse_expression(text, vars), vars);
    if (const MPoly* p = std::get_if<MPoly>(&v)) return *p;
    if (const RationalFunction* f = std::get_if<RationalFunction>(&v)) {
        if (f->is_polynomial()) return f->num();
        throw structural_error("expected a polynomial, got: " + f->str());
    }
    throw structural_error("expected a polynomial, got a Darboux function");
}

RationalFunction parse_rational(const std::string& text, const VarSet& vars) {
    LoweredValue v = lower_to_semantics(parse_expression(text, vars), vars);
    if (const MPoly* p = std::get_if<MPoly>(&v)) return RationalFunction(*p);
    if (const RationalFunction* f = std::get_if<RationalFunction>(&v)) return *f;
    throw structural_error("expected a rational function, got a Darboux function");
}

DarbouxFunction parse_darboux(const std::string& text, const VarSet& vars) {
    LoweredValue v = lower_to_semantics(parse_expression(text, vars), vars);
    if (const MPoly* p = std::get_if<MPoly>(&v)) return DarbouxFunction(RationalFunction(*p));
    if (const RationalFunction* f = std::get_if<RationalFunction>(&v)) return DarbouxFunction(*f);
    return std::get<DarbouxFunction>(std::move(v));
}

}  // namespace folint
