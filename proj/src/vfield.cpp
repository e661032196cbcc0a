#include "folint/vfield.hpp"

namespace folint {

VectorField::VectorField(VarSet vars, std::vector<MPoly> comps)
    : vars_(std::move(vars)), comps_(std::move(comps)) {
    if (comps_.size() != vars_.size())
        throw structural_error("vector field needs one component per variable");
    bool all_zero = true;
    for (const auto& c : comps_) {
        if (c.vars() != vars_)
            throw structural_error("vector-field component over mismatched variable set");
        all_zero = all_zero && c.is_zero();
    }
    if (all_zero) throw structural_error("identically zero vector field");
}

std::string VectorField::str() const {
    std::string s;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) s += ", ";
        s += "(" + comps_[i].str() + ") d/d" + vars_.name(i);
    }
    return s;
}

MPoly lie_derivative(const VectorField& v, const MPoly& p) {
    if (v.vars() != p.vars())
        throw structural_error("Lie derivative across variable sets");
    MPoly acc = MPoly::zero(p.vars());
    for (std::size_t i = 0; i < v.dimension(); ++i)
        acc += v.component(i) * p.derivative(p.vars().name(i));
    return acc;
}

RationalFunction lie_derivative(const VectorField& v, const RationalFunction& f) {
    if (v.vars() != f.vars())
        throw structural_error("Lie derivative across variable sets");
    const MPoly& n = f.num();
    const MPoly& d = f.den();
    return RationalFunction(lie_derivative(v, n) * d - n * lie_derivative(v, d), d * d);
}

bool darboux_lie_derivative_vanishes(const VectorField& v, const DarbouxFunction& d) {
    if (v.vars() != d.vars())
        throw structural_error("Lie derivative across variable sets");
    const MPoly& nr = d.prefactor().num();
    const MPoly& dr = d.prefactor().den();
    const MPoly& ns = d.exponent().num();
    const MPoly& ds = d.exponent().den();
    MPoly a = lie_derivative(v, nr) * dr - nr * lie_derivative(v, dr);
    MPoly b = lie_derivative(v, ns) * ds - ns * lie_derivative(v, ds);
    return (a * (ds * ds) + nr * dr * b).is_zero();
}

VectorField restrict_to_coordinate_plane(const VectorField& v, const std::string& plane) {
    std::size_t normal = v.vars().index(plane);
    const MPoly& n = v.component(normal);
    if (!n.is_zero() && !n.divisible_by(plane))
        throw domain_error("{" + plane + " = 0} is not invariant: normal component " + n.str() +
                           " does not vanish on the plane");
    std::vector<MPoly> comps;
    for (std::size_t i = 0; i < v.dimension(); ++i)
        if (i != normal) comps.push_back(v.component(i).without_variable(plane));
    VarSet reduced = comps.front().vars();
    return VectorField(reduced, std::move(comps));
}

}  // namespace folint
