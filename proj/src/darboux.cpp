#include "folint/darboux.hpp"

#include <cmath>

namespace folint {

std::vector<RationalFunction> DarbouxFunction::e_free_gradient() const {
    std::vector<RationalFunction> g;
    g.reserve(vars().size());
    for (const auto& v : vars().names())
        g.push_back(r_.derivative(v) + r_ * s_.derivative(v));
    return g;
}

std::complex<double> DarbouxFunction::eval(std::span<const std::complex<double>> point) const {
    std::complex<double> val = r_.eval(point);
    if (!s_.is_zero()) val *= std::exp(s_.eval(point));
    return val;
}

std::string DarbouxFunction::str() const {
    if (is_plain_rational()) return r_.str();
    return "(" + r_.str() + ")*exp(" + s_.str() + ")";
}

DarbouxFunction substitute(const DarbouxFunction& d,
                           const std::map<std::string, RationalFunction>& bindings,
                           const VarSet& target) {
    return DarbouxFunction(substitute(d.prefactor(), bindings, target),
                           substitute(d.exponent(), bindings, target));
}

IndependenceResult independence_witness(const DarbouxFunction& F, const DarbouxFunction& G) {
    if (F.vars() != G.vars())
        throw structural_error("independence test across variable sets");
    std::vector<RationalFunction> u = F.e_free_gradient();
    std::vector<RationalFunction> w = G.e_free_gradient();
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            RationalFunction m = u[i] * w[j] - u[j] * w[i];
            if (!m.is_zero()) return {true, std::make_pair(i, j), std::move(m)};
        }
    }
    return {false, std::nullopt, std::nullopt};
}

}  // namespace folint
