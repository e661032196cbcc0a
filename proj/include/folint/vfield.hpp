#ifndef FOLINT_VFIELD_HPP
#define FOLINT_VFIELD_HPP

#include <string>
#include <vector>

#include "folint/darboux.hpp"
#include "folint/mpoly.hpp"

namespace folint {

// Polynomial vector field sum_i comps[i] * d/d(vars[i]), i.e. a derivation.
// One component per variable; not all components may vanish identically.
class VectorField {
public:
    VectorField(VarSet vars, std::vector<MPoly> comps);

    const VarSet& vars() const { return vars_; }
    const std::vector<MPoly>& components() const { return comps_; }
    const MPoly& component(std::size_t i) const { return comps_.at(i); }
    std::size_t dimension() const { return comps_.size(); }

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.vars_ == b.vars_ && a.comps_ == b.comps_;
    }

    std::string str() const;

private:
    VarSet vars_;
    std::vector<MPoly> comps_;
};

MPoly lie_derivative(const VectorField& v, const MPoly& p);
RationalFunction lie_derivative(const VectorField& v, const RationalFunction& f);

// Exact test of v(R e^S) = 0 through the denominator-cleared polynomial
// identity (v(nR) dR - nR v(dR)) dS^2 + nR dR (v(nS) dS - nS v(dS)) = 0.
bool darboux_lie_derivative_vanishes(const VectorField& v, const DarbouxFunction& d);

// Drops the `plane` coordinate from an invariant coordinate plane {plane = 0}.
// The component along `plane` must vanish on the plane, else domain_error.
VectorField restrict_to_coordinate_plane(const VectorField& v, const std::string& plane);

}  // namespace folint

#endif
