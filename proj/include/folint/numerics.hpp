#ifndef FOLINT_NUMERICS_HPP
#define FOLINT_NUMERICS_HPP

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "folint/darboux.hpp"
#include "folint/vfield.hpp"

namespace folint {

using Cplx = std::complex<double>;

struct LeafSample {
    Cplx tau;                    // complex time along the chosen ray
    std::array<Cplx, 3> state;
};

struct LeafTrajectory {
    std::vector<LeafSample> samples;  // |tau| strictly increasing
    double step = 0.0;
    Cplx direction{1.0, 0.0};
    bool escaped = false;  // stopped at the escape radius (expected near saddles)
};

// Fixed-step RK4 along the complex-time ray tau = s*direction. Requires
// step <= 1e-2, a unit direction (within 1e-12), and a start inside the
// closed unit polydisc.
LeafTrajectory trace_leaf(const VectorField& v, const std::array<Cplx, 3>& start, Cplx direction,
                          double step, std::size_t n_steps, double escape_radius = 2.0);

struct DriftResult {
    double max_relative_drift = 0.0;
    // First sample whose denominators fell below 1e-8, when the scan stopped early.
    std::optional<std::size_t> warning_index;
};

// max_i |d(sample_i) - d(sample_0)| / max(|d(sample_0)|, 1e-30)
DriftResult conservation_drift(const LeafTrajectory& traj, const DarbouxFunction& d);

// Closed forms used by the chart-(x,t,z) conjugacy data.
Cplx transformed_h(Cplx x, Cplx t);           // (1/t) e^{t^2 x + t}
Cplx transformed_g(Cplx x, Cplx t, Cplx z);   // -t x e^t z
// -t^2 x /(1 - e^{t^2 x}) * z, evaluated cancellation-free for small t^2 x and
// extended by z at x = 0.
Cplx phi3(Cplx x, Cplx t, Cplx z);

struct ConjugacyEval {
    std::array<Cplx, 3> input;
    Cplx phi1, phi2, phi3;
    std::string branch;  // square-root branch used for phi2
};

// phi1 = H(0,t) - H(x,t); phi2 = principal sqrt of H(0,t) - H(0,1);
// phi3 as above. t = 0 is a domain error.
ConjugacyEval eval_conjugacy(Cplx x, Cplx t, Cplx z);

struct ConjugacyResiduals {
    double r_g_abs = 0.0, r_g_rel = 0.0;
    double r_h_abs = 0.0, r_h_rel = 0.0;
};

// r_G: |phi1*phi3 - transformed_g|; r_H: |(phi2^2 - phi1) - (H(x,t) - H(0,1))|.
// Relative values are scaled by the magnitudes of the participating terms.
ConjugacyResiduals conjugacy_identity_residuals(Cplx x, Cplx t, Cplx z);

// CSV with columns step, Re/Im of tau and of each coordinate, then Re/Im of
// each supplied integral along the trajectory.
std::string trajectory_csv(const LeafTrajectory& traj, const VarSet& vars,
                           std::span<const DarbouxFunction> integrals);

// Deterministic complex grid for the conjugacy checks: nx points with
// |x| <= xmax including x = 0, nt points with tmin <= |t| <= tmax, nz points
// with |z| <= zmax, phases spread over the circles.
std::vector<std::array<Cplx, 3>> conjugacy_grid(std::size_t nx, std::size_t nt, std::size_t nz,
                                                double xmax = 0.3, double tmin = 0.5,
                                                double tmax = 2.0, double zmax = 1.0);

}  // namespace folint

#endif
