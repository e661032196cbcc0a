#include <doctest.h>

#include <random>

#include "folint/expr.hpp"
#include "folint/singular.hpp"

using namespace folint;

namespace {

const VarSet XYZ{"x", "y", "z"};
const VarSet S{"s"};

MPoly P(const std::string& s) { return parse_polynomial(s, XYZ); }

VectorField field_x() {
    return VectorField(XYZ, {P("2*x*y"), P("x^3 + 2*y^2"), P("-2*y*z")});
}

VectorField field_y() {
    return VectorField(XYZ, {P("x*(x - 2*y^2 - y)"), P("y*(x - y^2 - y)"),
                             P("-z*(x - y^2 - y)")});
}

VectorField radial() { return VectorField(XYZ, {P("x"), P("y"), P("-z")}); }

std::map<std::string, MPoly> curve(const std::string& cx, const std::string& cy,
                                   const std::string& cz) {
    return {{"x", parse_polynomial(cx, S)},
            {"y", parse_polynomial(cy, S)},
            {"z", parse_polynomial(cz, S)}};
}

std::vector<Rat> exact_values(const SingularReport& r) {
    std::vector<Rat> out;
    for (const auto& e : r.eigenvalues) {
        REQUIRE(e.is_exact());
        out.push_back(e.exact_value());
    }
    return out;
}

}  // namespace

TEST_CASE("singular points of the counterexample fields") {
    std::array<Rat, 3> origin{Rat(0), Rat(0), Rat(0)};
    std::array<Rat, 3> zaxis{Rat(0), Rat(0), Rat(1)};
    std::array<Rat, 3> off{Rat(1), Rat(1), Rat(0)};
    CHECK(is_singular_at(field_x(), origin));
    CHECK(is_singular_at(field_x(), zaxis));
    CHECK_FALSE(is_singular_at(field_x(), off));
    CHECK(is_singular_at(field_y(), origin));
    CHECK(is_singular_at(field_y(), zaxis));
}

TEST_CASE("singular locus along curves") {
    CurveLocus lx = singular_locus_on_curve(field_x(), curve("0", "0", "s"));
    CHECK(lx.all_parameter_values);
    CurveLocus ly = singular_locus_on_curve(field_y(), curve("0", "0", "s"));
    CHECK(ly.all_parameter_values);

    CurveLocus xaxis = singular_locus_on_curve(field_x(), curve("s", "0", "0"));
    CHECK_FALSE(xaxis.all_parameter_values);
    CHECK(xaxis.roots == std::vector<Rat>{Rat(0)});
    CHECK_FALSE(xaxis.residual.has_value());

    // Generic lines through the origin for both fields meet the locus at 0 only.
    for (long a : {1L, -2L, 3L}) {
        for (long b : {1L, 2L}) {
            auto line = curve("s", std::to_string(a) + "*s", std::to_string(b) + "*s");
            for (const VectorField& v : {field_x(), field_y()}) {
                CurveLocus l = singular_locus_on_curve(v, line);
                CHECK_FALSE(l.all_parameter_values);
                CHECK(l.roots == std::vector<Rat>{Rat(0)});
            }
        }
    }

    // Non-rational intersections stay in the residual factor.
    VectorField quad(XYZ, {P("x^2 - 2*z^2"), P("x^2 - 2*z^2"), P("x^2 - 2*z^2")});
    CurveLocus lq = singular_locus_on_curve(quad, curve("s", "0", "1"));
    CHECK_FALSE(lq.all_parameter_values);
    CHECK(lq.roots.empty());
    REQUIRE(lq.residual.has_value());
    CHECK(lq.residual->size() == 3);  // s^2 - 2
}

TEST_CASE("linear part and eigenvalues") {
    std::array<Rat, 3> origin{Rat(0), Rat(0), Rat(0)};

    SingularReport rad = linear_part(radial(), origin);
    CHECK(exact_values(rad) == std::vector<Rat>{Rat(-1), Rat(1), Rat(1)});
    CHECK(rad.simple);

    SingularReport diag = linear_part(
        VectorField(XYZ, {P("x"), P("2*y"), P("3*z")}), origin);
    CHECK(exact_values(diag) == std::vector<Rat>{Rat(1), Rat(2), Rat(3)});
    CHECK(diag.simple);

    std::array<Rat, 3> zpoint{Rat(0), Rat(0), Rat(1)};
    SingularReport nil = linear_part(field_x(), zpoint);
    CHECK(exact_values(nil) == std::vector<Rat>{Rat(0), Rat(0), Rat(0)});
    CHECK_FALSE(nil.simple);
    CHECK(nil.linear_part[2][1] == Rat(-2));  // the single nonzero Jacobian entry

    CHECK_THROWS_AS(linear_part(field_x(), std::array<Rat, 3>{Rat(1), Rat(1), Rat(0)}),
                    domain_error);
}

TEST_CASE("trace and determinant match the eigenvalue multiset") {
    std::mt19937_64 rng(0xe16e2ULL);
    std::uniform_int_distribution<long> entry(-4, 4);
    std::array<Rat, 3> origin{Rat(0), Rat(0), Rat(0)};
    for (int iter = 0; iter < 120; ++iter) {
        std::array<std::array<long, 3>, 3> a{};
        bool nonzero = false;
        for (auto& row : a)
            for (auto& e : row) {
                e = entry(rng);
                nonzero = nonzero || e != 0;
            }
        if (!nonzero) continue;
        std::vector<MPoly> comps;
        for (int i = 0; i < 3; ++i) {
            MPoly c(XYZ);
            for (int j = 0; j < 3; ++j)
                c += MPoly::variable(XYZ, XYZ.name(j)).scaled(Rat(a[i][j]));
            comps.push_back(c);
        }
        bool all_zero = true;
        for (const auto& c : comps) all_zero = all_zero && c.is_zero();
        if (all_zero) continue;
        SingularReport rep = linear_part(VectorField(XYZ, comps), origin);

        std::complex<double> sum = 0.0, prod = 1.0;
        bool all_exact = true;
        for (const auto& e : rep.eigenvalues) {
            sum += e.value();
            prod *= e.value();
            all_exact = all_exact && e.is_exact();
        }
        Rat tr = rep.linear_part[0][0] + rep.linear_part[1][1] + rep.linear_part[2][2];
        Rat det = -rep.char_poly[0];
        if (all_exact) {
            Rat esum(0), eprod(1);
            for (const auto& e : rep.eigenvalues) {
                esum += e.exact_value();
                eprod *= e.exact_value();
            }
            CHECK(esum == tr);
            CHECK(eprod == det);
        } else {
            double scale = std::max({1.0, std::fabs(tr.to_double()), std::fabs(det.to_double())});
            CHECK(std::abs(sum - std::complex<double>(tr.to_double())) <= 1e-9 * scale);
            CHECK(std::abs(prod - std::complex<double>(det.to_double())) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("cubics without rational roots fall back to verified numerics") {
    // Companion field of s^3 - s - 1: one real root near 1.3247, a complex pair.
    std::array<Rat, 3> origin{Rat(0), Rat(0), Rat(0)};
    VectorField companion(XYZ, {P("y"), P("z"), P("x + y")});
    SingularReport rep = linear_part(companion, origin);
    REQUIRE(rep.eigenvalues.size() == 3);
    for (const auto& e : rep.eigenvalues) CHECK_FALSE(e.is_exact());
    CHECK(rep.simple);

    std::complex<double> prod = 1.0;
    for (const auto& e : rep.eigenvalues) prod *= e.value();
    CHECK(std::abs(prod - 1.0) < 1e-9);  // determinant is 1

    bool has_plastic = false;
    for (const auto& e : rep.eigenvalues)
        has_plastic = has_plastic ||
                      (std::abs(e.value().imag()) < 1e-12 &&
                       std::fabs(e.value().real() - 1.3247179572447460) < 1e-9);
    CHECK(has_plastic);
}

TEST_CASE("ledgers with approximate entries use the tolerance path") {
    BaumBottLedger ledger{0, {{"p1", ExactOrApprox::approx({2.0, 0.0}),
                               ExactOrApprox::approx({2.0, 1e-13})}}};
    GlobalIndexReport rep = baum_bott_global_check(ledger);
    CHECK_FALSE(rep.sum.is_exact());
    CHECK(rep.count_ok);
    CHECK(rep.sum_ok);  // BB approx 4 within 1e-9 relative
    CHECK(rep.all_indices_at_least_four);
}

TEST_CASE("eigenvalue ratio screening") {
    std::array<Rat, 3> origin{Rat(0), Rat(0), Rat(0)};
    RatioCheck ok = eigenvalue_ratio_rationality(linear_part(radial(), origin));
    CHECK(ok.ok);

    RatioCheck scaled = eigenvalue_ratio_rationality(
        linear_part(VectorField(XYZ, {P("2*x"), P("3*y"), P("-6*z")}), origin));
    CHECK(scaled.ok);

    RatioCheck mixed = eigenvalue_ratio_rationality(
        linear_part(VectorField(XYZ, {MPoly::zero(XYZ), P("y"), P("z")}), origin));
    CHECK_FALSE(mixed.ok);
    REQUIRE(!mixed.violations.empty());
    CHECK(mixed.violations.front().find("mixed zero/nonzero") != std::string::npos);

    // Rotation block: complex pair is approximate, hence undecidable.
    RatioCheck rot = eigenvalue_ratio_rationality(
        linear_part(VectorField(XYZ, {P("y"), P("-x"), P("z")}), origin));
    CHECK_FALSE(rot.ok);
    bool has_undecidable = false;
    for (const auto& v : rot.violations)
        has_undecidable = has_undecidable || v.find("undecidable-approximate") != std::string::npos;
    CHECK(has_undecidable);
}

TEST_CASE("Baum-Bott values") {
    auto e = [](long n, long d = 1) { return ExactOrApprox::exact(Rat(n, d)); };
    CHECK(baum_bott(e(1), e(1)).exact_value() == Rat(4));
    CHECK(baum_bott(e(2), e(1)).exact_value() == Rat(9, 2));
    CHECK(baum_bott(e(1), e(-1)).exact_value() == Rat(0));
    CHECK_THROWS_AS(baum_bott(e(0), e(1)), domain_error);

    std::mt19937_64 rng(0xbb07ULL);
    std::uniform_int_distribution<long> nz(-9, 9);
    for (int iter = 0; iter < 200; ++iter) {
        long a = nz(rng), b = nz(rng), c = nz(rng);
        if (a == 0 || b == 0 || c == 0) continue;
        CHECK(baum_bott(e(a), e(b)).exact_value() == baum_bott(e(b), e(a)).exact_value());
        CHECK(baum_bott(e(a * c), e(b * c)).exact_value() ==
              baum_bott(e(a), e(b)).exact_value());
        CHECK(baum_bott(e(a), e(a)).exact_value() == Rat(4));
    }

    ExactOrApprox approx = baum_bott(ExactOrApprox::approx({1.0, 1.0}), e(1));
    CHECK_FALSE(approx.is_exact());
    CHECK(std::abs(approx.value() - std::complex<double>(3.5, 0.5)) < 1e-12);
}

TEST_CASE("global index ledger checks") {
    auto one = ExactOrApprox::exact(Rat(1));

    BaumBottLedger deg0{0, {{"p1", one, one}}};
    GlobalIndexReport r0 = baum_bott_global_check(deg0);
    CHECK(r0.count_ok);
    CHECK(r0.sum_ok);
    CHECK(r0.consistent());
    CHECK(r0.excess == Rat(0));
    CHECK_FALSE(r0.contradiction);

    // Degree 1 with every eigenvalue pair equal: seven entries of index 4.
    BaumBottLedger deg1{1, {}};
    for (int i = 0; i < 7; ++i) deg1.entries.push_back({"p" + std::to_string(i), one, one});
    GlobalIndexReport r1 = baum_bott_global_check(deg1);
    CHECK_FALSE(r1.count_ok);      // 7 != 3
    CHECK_FALSE(r1.sum_ok);        // 28 != 9
    CHECK(r1.all_indices_at_least_four);
    CHECK(r1.contradiction);       // 12 > 9
    CHECK(r1.excess == Rat(3));    // 3*k^2

    // Right entry count for degree 1, one saddle-like index below 4.
    BaumBottLedger deg1ok{1,
                          {{"p1", one, one},
                           {"p2", one, one},
                           {"p3", ExactOrApprox::exact(Rat(1)), ExactOrApprox::exact(Rat(-1))}}};
    GlobalIndexReport r2 = baum_bott_global_check(deg1ok);
    CHECK(r2.count_ok);
    CHECK_FALSE(r2.sum_ok);  // 4 + 4 + 0 = 8, not 9
    CHECK_FALSE(r2.all_indices_at_least_four);
    CHECK_FALSE(r2.contradiction);

    // The exact identity 4(k^2+k+1) - (k+2)^2 = 3k^2 for a range of degrees.
    for (unsigned k = 0; k <= 50; ++k) {
        BaumBottLedger l{k, {{"p", one, one}}};
        GlobalIndexReport r = baum_bott_global_check(l);
        CHECK(r.excess == Rat(3 * static_cast<long>(k) * static_cast<long>(k)));
    }
}
