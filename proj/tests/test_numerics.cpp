#include <doctest.h>

#include <cmath>

#include "folint/expr.hpp"
#include "folint/numerics.hpp"

using namespace folint;

namespace {

const VarSet XYZ{"x", "y", "z"};

MPoly P(const std::string& s) { return parse_polynomial(s, XYZ); }

VectorField field_x() {
    return VectorField(XYZ, {P("2*x*y"), P("x^3 + 2*y^2"), P("-2*y*z")});
}

VectorField field_y() {
    return VectorField(XYZ, {P("x*(x - 2*y^2 - y)"), P("y*(x - y^2 - y)"),
                             P("-z*(x - y^2 - y)")});
}

VectorField radial() { return VectorField(XYZ, {P("x"), P("y"), P("-z")}); }

}  // namespace

TEST_CASE("linear field integrates to exponentials") {
    std::array<Cplx, 3> start{0.5, 0.5, 0.5};
    LeafTrajectory traj = trace_leaf(radial(), start, 1.0, 1e-3, 1000);
    REQUIRE(traj.samples.size() == 1001);
    CHECK_FALSE(traj.escaped);
    const auto& fin = traj.samples.back().state;
    double e = std::exp(1.0);
    CHECK(std::abs(fin[0] - 0.5 * e) <= 1e-9 * 0.5 * e);
    CHECK(std::abs(fin[1] - 0.5 * e) <= 1e-9 * 0.5 * e);
    CHECK(std::abs(fin[2] - 0.5 / e) <= 1e-9 * 0.5 / e);
}

TEST_CASE("complex-time rays rotate the flow") {
    Cplx dir{0.6, 0.8};
    LeafTrajectory traj = trace_leaf(radial(), {0.5, 0.5, 0.5}, dir, 1e-3, 1000);
    Cplx growth = std::exp(dir);
    const auto& fin = traj.samples.back().state;
    CHECK(std::abs(fin[0] - 0.5 * growth) <= 1e-9 * std::abs(0.5 * growth));
    CHECK(std::abs(fin[2] - 0.5 / growth) <= 1e-9 * std::abs(0.5 / growth));
    CHECK(std::abs(traj.samples.back().tau - dir) <= 1e-12);

    // Exact first integrals are conserved along any ray.
    CHECK(conservation_drift(traj, parse_darboux("x*z", XYZ)).max_relative_drift <= 1e-9);
}

TEST_CASE("trace preconditions") {
    std::array<Cplx, 3> start{0.5, 0.5, 0.5};
    CHECK_THROWS_AS(trace_leaf(radial(), start, 1.0, 0.05, 10), domain_error);
    CHECK_THROWS_AS(trace_leaf(radial(), start, 2.0, 1e-3, 10), domain_error);
    CHECK_THROWS_AS(trace_leaf(radial(), {1.5, 0.0, 0.0}, 1.0, 1e-3, 10), domain_error);
}

TEST_CASE("escape truncates and flags") {
    // Radial growth from 0.9 crosses radius 2 well before 2000 steps.
    LeafTrajectory traj = trace_leaf(radial(), {0.9, 0.9, 0.9}, 1.0, 1e-2, 2000, 2.0);
    CHECK(traj.escaped);
    CHECK(traj.samples.size() < 2001);
    double last = std::abs(traj.samples.back().state[0]);
    CHECK(last > 2.0);
}

TEST_CASE("conservation drift on exact first integrals") {
    LeafTrajectory tx = trace_leaf(field_x(), {0.1, 0.1, 0.1}, 1.0, 1e-3, 1000);
    CHECK(conservation_drift(tx, parse_darboux("(y^2 - x^3)*z^2", XYZ)).max_relative_drift <=
          1e-6);
    CHECK(conservation_drift(tx, parse_darboux("x*z", XYZ)).max_relative_drift <= 1e-6);
    CHECK(conservation_drift(tx, parse_darboux("1", XYZ)).max_relative_drift == 0.0);
    CHECK(conservation_drift(tx, parse_darboux("x", XYZ)).max_relative_drift > 1e-2);

    LeafTrajectory ty = trace_leaf(field_y(), {0.1, 0.05, 0.1}, 1.0, 1e-3, 1000);
    double minx = 1e9;
    for (const auto& s : ty.samples) minx = std::min(minx, std::abs(s.state[0]));
    CHECK(minx >= 1e-2);
    CHECK(conservation_drift(ty, parse_darboux("(x/y)*exp((y^2 + y)/x)", XYZ))
              .max_relative_drift <= 1e-6);
    CHECK(conservation_drift(ty, parse_darboux("y*z", XYZ)).max_relative_drift <= 1e-6);
    CHECK(conservation_drift(ty, parse_darboux("(-x*z)*exp((y^2 + y)/x)", XYZ))
              .max_relative_drift <= 1e-6);
}

TEST_CASE("denominator guard reports the offending sample") {
    // x crosses zero along this straight flow, 1/x blows up.
    VectorField drift_field(XYZ, {MPoly::constant(XYZ, Rat(-1)), P("y"), P("z")});
    LeafTrajectory t = trace_leaf(drift_field, {0.005, 0.5, 0.5}, 1.0, 1e-3, 100);
    DriftResult r = conservation_drift(t, parse_darboux("y/x", XYZ));
    REQUIRE(r.warning_index.has_value());
    CHECK(*r.warning_index > 0);
}

TEST_CASE("saddle behaviour: |z| shrinks while |x| grows") {
    for (auto [field, start] : {std::pair{field_x(), std::array<Cplx, 3>{0.1, 0.1, 0.1}},
                                std::pair{field_y(), std::array<Cplx, 3>{0.1, 0.05, 0.1}}}) {
        LeafTrajectory t = trace_leaf(field, start, 1.0, 1e-3, 1000);
        for (std::size_t i = 1; i < t.samples.size(); ++i) {
            CHECK(std::abs(t.samples[i].state[0]) > std::abs(t.samples[i - 1].state[0]));
            CHECK(std::abs(t.samples[i].state[2]) < std::abs(t.samples[i - 1].state[2]));
        }
    }
}

TEST_CASE("RK4 order: step halving against a quarter-step reference") {
    std::array<Cplx, 3> start{0.5, 0.5, 0.5};
    auto endpoint = [&](double h, std::size_t n) {
        return trace_leaf(radial(), start, 1.0, h, n).samples.back().state[0];
    };
    Cplx full = endpoint(1e-2, 100);
    Cplx half = endpoint(5e-3, 200);
    Cplx quarter = endpoint(2.5e-3, 400);
    double e_full = std::abs(full - quarter);
    double e_half = std::abs(half - quarter);
    REQUIRE(e_half > 0.0);
    double ratio = e_full / e_half;
    CHECK(ratio >= 12.0);
    CHECK(ratio <= 20.0);
}

TEST_CASE("trajectory CSV shape") {
    LeafTrajectory t = trace_leaf(radial(), {0.5, 0.5, 0.5}, 1.0, 1e-3, 5);
    std::vector<DarbouxFunction> ints = {parse_darboux("x*z", XYZ)};
    std::string csv = trajectory_csv(t, XYZ, ints);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "step,tau_re,tau_im,x_re,x_im,y_re,y_im,z_re,z_im,I0_re,I0_im");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);  // header + 6 samples
}

TEST_CASE("conjugacy component values") {
    // On the divisor the third component extends by the identity.
    ConjugacyEval on_e = eval_conjugacy(0.0, 1.3, {0.3, 0.0});
    CHECK(on_e.phi3 == Cplx{0.3, 0.0});
    CHECK(on_e.branch == "principal");

    // Near the divisor: |phi3 - z| is first order in t^2 x.
    ConjugacyEval near_e = eval_conjugacy(1e-6, 1.0, 1.0);
    CHECK(std::abs(near_e.phi3 - 1.0) <= 1e-5);

    CHECK_THROWS_AS(eval_conjugacy(0.1, 0.0, 0.5), domain_error);

    // phi1 * phi3 = -t x e^t z identically.
    for (Cplx x : {Cplx(0.25, 0.1), Cplx(1e-7, 0.0), Cplx(0.0)}) {
        for (Cplx t : {Cplx(1.2, 0.0), Cplx(0.6, -0.7)}) {
            Cplx z{0.4, 0.2};
            ConjugacyEval e = eval_conjugacy(x, t, z);
            Cplx rhs = transformed_g(x, t, z);
            CHECK(std::abs(e.phi1 * e.phi3 - rhs) <=
                  1e-9 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("conjugacy residuals on sample points") {
    ConjugacyResiduals a = conjugacy_identity_residuals({0.01, 0.0}, {1.2, 0.0}, {0.5, 0.0});
    CHECK(a.r_g_rel <= 1e-12);
    CHECK(a.r_h_rel <= 1e-12);

    ConjugacyResiduals b = conjugacy_identity_residuals({0.0, 0.0}, {1.2, 0.0}, {0.5, 0.0});
    CHECK(b.r_g_abs == 0.0);

    ConjugacyResiduals c = conjugacy_identity_residuals({0.3, 0.0}, {0.7, 0.0}, {0.9, 0.0});
    CHECK(c.r_g_rel <= 1e-10);
    CHECK(c.r_h_rel <= 1e-10);
}

TEST_CASE("phi3 stays within |t^2 x| of the identity on the grid") {
    auto grid = conjugacy_grid(20, 20, 5);
    CHECK(grid.size() == 2000);
    std::size_t divisor_points = 0;
    for (const auto& [x, t, z] : grid) {
        CHECK(std::abs(x) <= 0.3 + 1e-12);
        CHECK(std::abs(t) >= 0.5 - 1e-12);
        CHECK(std::abs(t) <= 2.0 + 1e-12);
        CHECK(std::abs(z) <= 1.0 + 1e-12);
        double dev = std::abs(phi3(x, t, z) - z);
        CHECK(dev <= std::abs(t * t * x) + 1e-300);
        if (x == 0.0) {
            ++divisor_points;
            CHECK(dev == 0.0);
        }
    }
    CHECK(divisor_points == 100);  // the x = 0 plane of the grid
}

TEST_CASE("closed forms match the symbolic pullbacks pointwise") {
    const VarSet XTZ{"x", "t", "z"};
    DarbouxFunction hm = parse_darboux("(1/t)*exp(t^2*x + t)", XTZ);
    DarbouxFunction gm = parse_darboux("(-t*x*z)*exp(t)", XTZ);
    for (Cplx x : {Cplx(0.2, 0.1), Cplx(-0.05, 0.3)}) {
        for (Cplx t : {Cplx(1.5, -0.2), Cplx(0.8, 0.4)}) {
            Cplx z{0.7, -0.3};
            std::array<Cplx, 3> pt{x, t, z};
            std::span<const Cplx> sp(pt.data(), 3);
            CHECK(std::abs(hm.eval(sp) - transformed_h(x, t)) <=
                  1e-12 * std::abs(transformed_h(x, t)));
            CHECK(std::abs(gm.eval(sp) - transformed_g(x, t, z)) <=
                  1e-12 * std::max(1.0, std::abs(transformed_g(x, t, z))));
        }
    }
}
