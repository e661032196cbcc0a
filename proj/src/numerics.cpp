#include "folint/numerics.hpp"

#include <cmath>
#include <cstdio>

namespace folint {

namespace {

std::array<Cplx, 3> field_at(const VectorField& v, const std::array<Cplx, 3>& s, Cplx dir) {
    std::span<const Cplx> pt(s.data(), 3);
    return {dir * v.component(0).eval(pt), dir * v.component(1).eval(pt),
            dir * v.component(2).eval(pt)};
}

double max_abs(const std::array<Cplx, 3>& s) {
    return std::max({std::abs(s[0]), std::abs(s[1]), std::abs(s[2])});
}

// e^w - 1 without cancellation near w = 0.
Cplx expm1c(Cplx w) {
    if (std::abs(w) < 1e-4) {
        // w (1 + w/2 + w^2/6 + w^3/24 + w^4/120); next term is ~1e-22 relative.
        Cplx s = 1.0 + w * (0.5 + w * (1.0 / 6.0 + w * (1.0 / 24.0 + w / 120.0)));
        return w * s;
    }
    return std::exp(w) - 1.0;
}

}  // namespace

LeafTrajectory trace_leaf(const VectorField& v, const std::array<Cplx, 3>& start, Cplx direction,
                          double step, std::size_t n_steps, double escape_radius) {
    if (v.dimension() != 3) throw structural_error("leaf tracing implemented for 3 variables");
    if (!(step > 0.0) || step > 1e-2)
        throw domain_error("step must lie in (0, 1e-2]");
    if (n_steps == 0) throw domain_error("n_steps must be positive");
    if (std::fabs(std::abs(direction) - 1.0) > 1e-12)
        throw domain_error("direction must be a unit complex number");
    if (max_abs(start) > 1.0)
        throw domain_error("start must lie in the closed unit polydisc");
    if (!(escape_radius > 0.0)) throw domain_error("escape radius must be positive");

    LeafTrajectory traj;
    traj.step = step;
    traj.direction = direction;
    traj.samples.reserve(n_steps + 1);
    std::array<Cplx, 3> s = start;
    traj.samples.push_back({Cplx(0.0), s});

    for (std::size_t i = 1; i <= n_steps; ++i) {
        auto k1 = field_at(v, s, direction);
        std::array<Cplx, 3> tmp;
        for (int j = 0; j < 3; ++j) tmp[j] = s[j] + 0.5 * step * k1[j];
        auto k2 = field_at(v, tmp, direction);
        for (int j = 0; j < 3; ++j) tmp[j] = s[j] + 0.5 * step * k2[j];
        auto k3 = field_at(v, tmp, direction);
        for (int j = 0; j < 3; ++j) tmp[j] = s[j] + step * k3[j];
        auto k4 = field_at(v, tmp, direction);
        for (int j = 0; j < 3; ++j)
            s[j] += step / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);

        traj.samples.push_back({direction * (step * static_cast<double>(i)), s});
        if (max_abs(s) > escape_radius) {
            traj.escaped = true;
            break;
        }
    }
    return traj;
}

DriftResult conservation_drift(const LeafTrajectory& traj, const DarbouxFunction& d) {
    if (traj.samples.empty()) throw domain_error("empty trajectory");
    DriftResult out;
    const double den_floor = 1e-8;
    Cplx base = 0.0;
    double base_mag = 0.0;
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        std::span<const Cplx> pt(traj.samples[i].state.data(), 3);
        double dr = std::abs(d.prefactor().den().eval(pt));
        double ds = std::abs(d.exponent().den().eval(pt));
        if (dr < den_floor || ds < den_floor) {
            out.warning_index = i;
            return out;
        }
        Cplx val = d.eval(pt);
        if (i == 0) {
            base = val;
            base_mag = std::max(std::abs(base), 1e-30);
            continue;
        }
        out.max_relative_drift = std::max(out.max_relative_drift, std::abs(val - base) / base_mag);
    }
    return out;
}

Cplx transformed_h(Cplx x, Cplx t) { return std::exp(t * t * x + t) / t; }

Cplx transformed_g(Cplx x, Cplx t, Cplx z) { return -t * x * std::exp(t) * z; }

Cplx phi3(Cplx x, Cplx t, Cplx z) {
    Cplx w = t * t * x;
    if (w == 0.0) return z;
    return w / expm1c(w) * z;
}

ConjugacyEval eval_conjugacy(Cplx x, Cplx t, Cplx z) {
    if (t == 0.0) throw domain_error("conjugacy data undefined at t = 0");
    ConjugacyEval e;
    e.input = {x, t, z};
    // H(0,t) - H(x,t) = (e^t/t)(1 - e^{t^2 x}).
    e.phi1 = -(std::exp(t) / t) * expm1c(t * t * x);
    // (phi2)^2 = H(0,t) - H(0,1) = e^t/t - e.
    e.phi2 = std::sqrt(std::exp(t) / t - std::exp(1.0));
    e.phi3 = phi3(x, t, z);
    e.branch = "principal";
    return e;
}

ConjugacyResiduals conjugacy_identity_residuals(Cplx x, Cplx t, Cplx z) {
    ConjugacyEval e = eval_conjugacy(x, t, z);
    ConjugacyResiduals r;

    Cplx lhs_g = e.phi1 * e.phi3;
    Cplx rhs_g = transformed_g(x, t, z);
    r.r_g_abs = std::abs(lhs_g - rhs_g);
    r.r_g_rel = r.r_g_abs / std::max({std::abs(lhs_g), std::abs(rhs_g), 1e-30});

    Cplx p2sq = e.phi2 * e.phi2;
    Cplx hxt = transformed_h(x, t);
    Cplx h01 = std::exp(1.0);
    Cplx lhs_h = p2sq - e.phi1;
    Cplx rhs_h = hxt - h01;
    r.r_h_abs = std::abs(lhs_h - rhs_h);
    double scale = std::abs(p2sq) + std::abs(e.phi1) + std::abs(hxt) + std::abs(h01);
    r.r_h_rel = r.r_h_abs / std::max(scale, 1e-30);
    return r;
}

std::vector<std::array<Cplx, 3>> conjugacy_grid(std::size_t nx, std::size_t nt, std::size_t nz,
                                                double xmax, double tmin, double tmax,
                                                double zmax) {
    if (nx == 0 || nt == 0 || nz == 0) throw domain_error("empty conjugacy grid");
    const double two_pi = 6.283185307179586;
    std::vector<Cplx> xs, ts, zs;
    xs.reserve(nx);
    xs.emplace_back(0.0);
    for (std::size_t j = 1; j < nx; ++j) {
        double r = xmax * static_cast<double>(j) / static_cast<double>(nx - 1);
        double th = two_pi * static_cast<double>(j) / static_cast<double>(nx) + 0.37;
        xs.push_back(r * Cplx(std::cos(th), std::sin(th)));
    }
    for (std::size_t k = 0; k < nt; ++k) {
        double f = nt > 1 ? static_cast<double>(k) / static_cast<double>(nt - 1) : 0.0;
        double r = tmin * std::pow(tmax / tmin, f);
        double th = two_pi * static_cast<double>(k) / static_cast<double>(nt) + 0.11;
        ts.push_back(r * Cplx(std::cos(th), std::sin(th)));
    }
    for (std::size_t m = 0; m < nz; ++m) {
        double f = static_cast<double>(m + 1) / static_cast<double>(nz);
        double r = zmax * f;
        double th = two_pi * static_cast<double>(m) / static_cast<double>(nz) + 0.73;
        zs.push_back(r * Cplx(std::cos(th), std::sin(th)));
    }
    std::vector<std::array<Cplx, 3>> grid;
    grid.reserve(nx * nt * nz);
    for (const auto& x : xs)
        for (const auto& t : ts)
            for (const auto& z : zs) grid.push_back({x, t, z});
    return grid;
}

std::string trajectory_csv(const LeafTrajectory& traj, const VarSet& vars,
                           std::span<const DarbouxFunction> integrals) {
    std::string out = "step,tau_re,tau_im";
    for (const auto& n : vars.names()) out += "," + n + "_re," + n + "_im";
    for (std::size_t k = 0; k < integrals.size(); ++k) {
        out += ",I" + std::to_string(k) + "_re,I" + std::to_string(k) + "_im";
    }
    out += "\n";
    char buf[64];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, ",%.17g", v);
        out += buf;
    };
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        const auto& s = traj.samples[i];
        out += std::to_string(i);
        put(s.tau.real());
        put(s.tau.imag());
        for (const auto& c : s.state) {
            put(c.real());
            put(c.imag());
        }
        std::span<const Cplx> pt(s.state.data(), 3);
        for (const auto& d : integrals) {
            Cplx v = d.eval(pt);
            put(v.real());
            put(v.imag());
        }
        out += "\n";
    }
    return out;
}

}  // namespace folint
