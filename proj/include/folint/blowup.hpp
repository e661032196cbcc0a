#ifndef FOLINT_BLOWUP_HPP
#define FOLINT_BLOWUP_HPP

#include <map>
#include <string>

#include "folint/darboux.hpp"
#include "folint/vfield.hpp"

namespace folint {

// One affine chart of a blow-up. `binding` expresses each source coordinate as
// a monomial (degree <= 2) in the chart coordinates; the zero locus of
// `exceptional` is the divisor E seen in this chart. Charts are plain data, so
// callers may define their own beyond the built-in families.
struct BlowupChart {
    std::string name;
    VarSet source;
    VarSet target;
    std::map<std::string, MPoly> binding;  // source variable -> monomial in target
    std::string exceptional;

    std::map<std::string, RationalFunction> binding_as_rational() const;
};

// Built-in charts over {x,y,z}.
namespace charts {
// Blow-up along the z-axis: (x,t,z) -> (x, t*x, z), divisor {x = 0}.
BlowupChart zaxis_xt();
// Second z-axis chart: (u,y,z) -> (u*y, y, z), divisor {y = 0}.
BlowupChart zaxis_uy();
// Punctual blow-up at the origin, chart where the divisor is {z = 0}:
// (u,v,z) -> (u*z, v*z, z).
BlowupChart punctual_z();
BlowupChart punctual_x();
BlowupChart punctual_y();

// Lookup by name; throws input_error for unknown names.
BlowupChart by_name(const std::string& name);
std::vector<std::string> names();
}  // namespace charts

struct FunctionPullback {
    // Order of the composed function along the divisor (negative for poles).
    long multiplicity = 0;
    // Divisor-free part: the exceptional variable divides neither the
    // prefactor's numerator nor its denominator.
    DarbouxFunction reduced;
    // The plain composition d o chart = e^multiplicity * reduced.
    DarbouxFunction composed;
};

FunctionPullback pullback_function(const BlowupChart& c, const DarbouxFunction& d);

struct VectorFieldPullback {
    // Power of the exceptional variable removed after clearing denominators.
    unsigned multiplicity = 0;
    VectorField saturated;
};

// Inverse-Jacobian chain-rule transport followed by minimal monomial clearing
// and division by the largest common power of the exceptional variable.
VectorFieldPullback pullback_vector_field(const BlowupChart& c, const VectorField& v);

// True iff the exceptional variable divides the field component along the
// exceptional direction, i.e. E is invariant.
bool is_divisor_invariant(const VectorField& saturated, const BlowupChart& c);

}  // namespace folint

#endif
