#include <doctest.h>

#include <random>

#include "folint/expr.hpp"

using namespace folint;

namespace {

const VarSet XYZ{"x", "y", "z"};

Expr random_ast(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 8);
    std::uniform_int_distribution<long> num(0, 99);
    std::uniform_int_distribution<int> var(0, 2);
    std::uniform_int_distribution<unsigned> expo(1, 9);
    switch (pick(rng)) {
        case 0: return Expr::make_number(mpz_class(num(rng)));
        case 1: return Expr::make_variable(XYZ.name(static_cast<std::size_t>(var(rng))));
        case 2:
            return Expr::make_binary(Expr::Kind::Add, random_ast(rng, depth - 1),
                                     random_ast(rng, depth - 1));
        case 3:
            return Expr::make_binary(Expr::Kind::Sub, random_ast(rng, depth - 1),
                                     random_ast(rng, depth - 1));
        case 4:
            return Expr::make_binary(Expr::Kind::Mul, random_ast(rng, depth - 1),
                                     random_ast(rng, depth - 1));
        case 5:
            return Expr::make_binary(Expr::Kind::Div, random_ast(rng, depth - 1),
                                     random_ast(rng, depth - 1));
        case 6: return Expr::make_unary(Expr::Kind::Neg, random_ast(rng, depth - 1));
        case 7: return Expr::make_pow(random_ast(rng, depth - 1), expo(rng));
        default: return Expr::make_unary(Expr::Kind::ExpOf, random_ast(rng, depth - 1));
    }
}

MPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 6);
    std::uniform_int_distribution<int> expo(0, 4);
    std::uniform_int_distribution<long> cnum(-9, 9);
    std::uniform_int_distribution<long> cden(1, 5);
    MPoly p(XYZ);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m(3, 0);
        for (auto& e : m) e = static_cast<std::uint32_t>(expo(rng));
        p.add_term(m, Rat(cnum(rng), cden(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("grammar shape") {
    Expr e = parse_expression("2*x*y", XYZ);
    Expr want = Expr::make_binary(
        Expr::Kind::Mul,
        Expr::make_binary(Expr::Kind::Mul, Expr::make_number(2), Expr::make_variable("x")),
        Expr::make_variable("y"));
    CHECK(e == want);

    CHECK(parse_expression("(y^2 - x^3)*z^2", XYZ) ==
          Expr::make_binary(
              Expr::Kind::Mul,
              Expr::make_binary(Expr::Kind::Sub, Expr::make_pow(Expr::make_variable("y"), 2),
                                Expr::make_pow(Expr::make_variable("x"), 3)),
              Expr::make_pow(Expr::make_variable("z"), 2)));

    // '-' binds to the atom, so -x^2 is (-x)^2.
    CHECK(parse_expression("-x^2", XYZ) ==
          Expr::make_pow(Expr::make_unary(Expr::Kind::Neg, Expr::make_variable("x")), 2));
}

TEST_CASE("parser rejections carry byte offsets") {
    CHECK_THROWS_AS(parse_expression("x^-1", XYZ), parse_error);
    CHECK_THROWS_AS(parse_expression("x^0", XYZ), parse_error);
    CHECK_THROWS_AS(parse_expression("x^(2)", XYZ), parse_error);
    CHECK_THROWS_AS(parse_expression("", XYZ), parse_error);
    CHECK_THROWS_AS(parse_expression("x +", XYZ), parse_error);
    CHECK_THROWS_AS(parse_expression("x y", XYZ), parse_error);
    CHECK_THROWS_AS(parse_expression("2*w", XYZ), parse_error);
    CHECK_THROWS_AS(parse_expression("x $ y", XYZ), parse_error);

    try {
        parse_expression("x + $", XYZ);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.offset == 4);
    }
}

TEST_CASE("lowering kinds") {
    CHECK(std::holds_alternative<MPoly>(lower_to_semantics(parse_expression("x*z", XYZ), XYZ)));
    CHECK(std::holds_alternative<RationalFunction>(
        lower_to_semantics(parse_expression("(y^2-x^3)/x^2", XYZ), XYZ)));

    LoweredValue v =
        lower_to_semantics(parse_expression("(x/y)*exp((y^2+y)/x)", XYZ), XYZ);
    const auto& d = std::get<DarbouxFunction>(v);
    CHECK(d.prefactor() == parse_rational("x/y", XYZ));
    CHECK(d.exponent() == parse_rational("(y^2+y)/x", XYZ));

    // exp inside exp is not representable.
    CHECK_THROWS_AS(lower_to_semantics(parse_expression("exp(exp(x))", XYZ), XYZ),
                    structural_error);
    // Sums across distinct exponentials are not representable.
    CHECK_THROWS_AS(lower_to_semantics(parse_expression("exp(x) + exp(y)", XYZ), XYZ),
                    structural_error);
    // ... but equal exponentials combine.
    CHECK(parse_darboux("2*exp(x) + 3*exp(x)", XYZ) == parse_darboux("5*exp(x)", XYZ));
}

TEST_CASE("print/parse round-trip on random ASTs") {
    std::mt19937_64 rng(0xa57a57ULL);
    for (int iter = 0; iter < 10000; ++iter) {
        Expr e = random_ast(rng, 4);
        std::string s = print_expression(e);
        Expr back = parse_expression(s, XYZ);
        REQUIRE(back == e);
    }
}

TEST_CASE("polynomial print/parse/lower round-trip") {
    std::mt19937_64 rng(0x9e1107ULL);
    for (int iter = 0; iter < 2000; ++iter) {
        MPoly p = random_poly(rng);
        MPoly back = parse_polynomial(p.str(), XYZ);
        REQUIRE(back == p);
    }
    // The leading-negative corner: -x^2 would reparse as (-x)^2.
    MPoly neg = MPoly::zero(XYZ) - parse_polynomial("x^2", XYZ);
    CHECK(neg.str() == "-1*x^2");
    CHECK(parse_polynomial(neg.str(), XYZ) == neg);
    CHECK(parse_polynomial("t^2 - x", VarSet{"x", "t", "z"}).str() == "t^2 - x");
}
