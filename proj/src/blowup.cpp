#include "folint/blowup.hpp"

#include <array>

namespace folint {

std::map<std::string, RationalFunction> BlowupChart::binding_as_rational() const {
    std::map<std::string, RationalFunction> out;
    for (const auto& [v, m] : binding) out.emplace(v, RationalFunction(m));
    return out;
}

namespace charts {

namespace {

BlowupChart make(std::string name, VarSet src, VarSet tgt,
                 std::map<std::string, std::string> bind, std::string exc) {
    BlowupChart c;
    c.name = std::move(name);
    c.source = std::move(src);
    c.target = std::move(tgt);
    for (auto& [v, expr] : bind) {
        MPoly m = MPoly::constant(c.target, Rat(1));
        std::string cur;
        for (char ch : expr + std::string("*")) {
            if (ch == '*') {
                m *= MPoly::variable(c.target, cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        c.binding.emplace(v, std::move(m));
    }
    c.exceptional = std::move(exc);
    return c;
}

}  // namespace

BlowupChart zaxis_xt() {
    return make("z-axis-xt", VarSet{"x", "y", "z"}, VarSet{"x", "t", "z"},
                {{"x", "x"}, {"y", "t*x"}, {"z", "z"}}, "x");
}

BlowupChart zaxis_uy() {
    return make("z-axis-uy", VarSet{"x", "y", "z"}, VarSet{"u", "y", "z"},
                {{"x", "u*y"}, {"y", "y"}, {"z", "z"}}, "y");
}

BlowupChart punctual_z() {
    return make("punctual-z", VarSet{"x", "y", "z"}, VarSet{"u", "v", "z"},
                {{"x", "u*z"}, {"y", "v*z"}, {"z", "z"}}, "z");
}

BlowupChart punctual_x() {
    return make("punctual-x", VarSet{"x", "y", "z"}, VarSet{"x", "u", "v"},
                {{"x", "x"}, {"y", "u*x"}, {"z", "v*x"}}, "x");
}

BlowupChart punctual_y() {
    return make("punctual-y", VarSet{"x", "y", "z"}, VarSet{"u", "y", "v"},
                {{"x", "u*y"}, {"y", "y"}, {"z", "v*y"}}, "y");
}

BlowupChart by_name(const std::string& name) {
    for (const auto& c : {zaxis_xt(), zaxis_uy(), punctual_z(), punctual_x(), punctual_y()})
        if (c.name == name) return c;
    throw input_error("unknown chart '" + name + "'");
}

std::vector<std::string> names() {
    return {"z-axis-xt", "z-axis-uy", "punctual-z", "punctual-x", "punctual-y"};
}

}  // namespace charts

namespace {

// Charts are data; enforce the shape every transport relies on: one monomial
// binding of degree 1 or 2 per source variable, an exceptional target variable.
void check_chart(const BlowupChart& c) {
    if (c.source.size() != c.target.size())
        throw structural_error("chart '" + c.name + "': source/target arity mismatch");
    if (!c.target.has(c.exceptional))
        throw structural_error("chart '" + c.name + "': exceptional variable '" +
                               c.exceptional + "' not a target variable");
    for (const auto& name : c.source.names()) {
        auto it = c.binding.find(name);
        if (it == c.binding.end())
            throw structural_error("chart '" + c.name + "': no binding for '" + name + "'");
        const MPoly& b = it->second;
        if (b.vars() != c.target || b.term_count() != 1 || b.degree() < 1 || b.degree() > 2)
            throw structural_error("chart '" + c.name + "': binding for '" + name +
                                   "' is not a monomial of degree 1 or 2");
    }
}

// Signed order along {e = 0} of a rational function in canonical form.
long exceptional_valuation(const RationalFunction& f, const std::string& e) {
    if (f.is_zero()) throw structural_error("valuation of the zero function");
    return static_cast<long>(f.num().multiplicity_in(e)) -
           static_cast<long>(f.den().multiplicity_in(e));
}

RationalFunction shift_valuation(const RationalFunction& f, const std::string& e, long k) {
    // Multiplies by e^{-k}; k is the valuation, so the result has order 0.
    if (k == 0) return f;
    MPoly n = f.num();
    MPoly d = f.den();
    if (k > 0)
        n = n.shifted_by(e, -k);
    else
        d = d.shifted_by(e, k);
    return RationalFunction(std::move(n), std::move(d));
}

}  // namespace

FunctionPullback pullback_function(const BlowupChart& c, const DarbouxFunction& d) {
    check_chart(c);
    if (d.vars() != c.source)
        throw structural_error("function not over the chart's source variables");
    DarbouxFunction composed = substitute(d, c.binding_as_rational(), c.target);
    long k = exceptional_valuation(composed.prefactor(), c.exceptional);
    DarbouxFunction reduced(shift_valuation(composed.prefactor(), c.exceptional, k),
                            composed.exponent());
    return {k, std::move(reduced), std::move(composed)};
}

VectorFieldPullback pullback_vector_field(const BlowupChart& c, const VectorField& v) {
    check_chart(c);
    if (v.vars() != c.source)
        throw structural_error("field not over the chart's source variables");
    const std::size_t n = c.source.size();
    if (n != 3 || c.target.size() != 3)
        throw structural_error("vector-field transport implemented for 3 variables");

    // Jacobian of the chart map, J[i][j] = d binding(source_i) / d target_j.
    std::array<std::array<MPoly, 3>, 3> J{{{MPoly::zero(c.target), MPoly::zero(c.target), MPoly::zero(c.target)},
                                           {MPoly::zero(c.target), MPoly::zero(c.target), MPoly::zero(c.target)},
                                           {MPoly::zero(c.target), MPoly::zero(c.target), MPoly::zero(c.target)}}};
    for (std::size_t i = 0; i < 3; ++i) {
        const MPoly& bi = c.binding.at(c.source.name(i));
        for (std::size_t j = 0; j < 3; ++j) J[i][j] = bi.derivative(c.target.name(j));
    }
    MPoly det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
    if (det.is_zero()) throw structural_error("chart with singular Jacobian");

    auto cof = [&](std::size_t r0, std::size_t c0) {
        std::array<std::size_t, 2> rr{}, cc{};
        for (std::size_t k = 0, t = 0; k < 3; ++k)
            if (k != r0) rr[t++] = k;
        for (std::size_t k = 0, t = 0; k < 3; ++k)
            if (k != c0) cc[t++] = k;
        MPoly m = J[rr[0]][cc[0]] * J[rr[1]][cc[1]] - J[rr[0]][cc[1]] * J[rr[1]][cc[0]];
        return ((r0 + c0) % 2) ? -m : m;
    };

    // Components of v composed with the chart.
    auto bind = c.binding_as_rational();
    std::array<RationalFunction, 3> vb{RationalFunction::zero(c.target),
                                       RationalFunction::zero(c.target),
                                       RationalFunction::zero(c.target)};
    for (std::size_t i = 0; i < 3; ++i) vb[i] = substitute(v.component(i), bind, c.target);

    // w = J^{-1} (v o chart); adj(J)_{ji} = cofactor(i, j).
    RationalFunction rdet{det};
    std::array<RationalFunction, 3> w{RationalFunction::zero(c.target),
                                      RationalFunction::zero(c.target),
                                      RationalFunction::zero(c.target)};
    for (std::size_t j = 0; j < 3; ++j) {
        RationalFunction acc = RationalFunction::zero(c.target);
        for (std::size_t i = 0; i < 3; ++i) acc += RationalFunction(cof(i, j)) * vb[i];
        w[j] = acc / rdet;
    }

    // Minimal monomial clearing all denominators (monomials by the chart invariant).
    Monomial mu(c.target.size(), 0);
    for (const auto& f : w) {
        if (f.is_zero()) continue;
        Monomial dm = f.den().leading_monomial();
        if (f.den().term_count() != 1)
            throw structural_error("chart transport produced a non-monomial denominator");
        for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = std::max(mu[i], dm[i]);
    }
    MPoly mono = MPoly::monomial(c.target, mu, Rat(1));
    std::vector<MPoly> comps;
    comps.reserve(3);
    for (const auto& f : w) {
        RationalFunction cleared = f * RationalFunction(mono);
        if (!cleared.is_polynomial())
            throw structural_error("denominator clearing failed in chart transport");
        comps.push_back(cleared.num());
    }

    unsigned m = UINT32_MAX;
    for (const auto& p : comps)
        if (!p.is_zero()) m = std::min(m, p.multiplicity_in(c.exceptional));
    if (m == UINT32_MAX) throw structural_error("transported field vanished identically");
    for (auto& p : comps)
        if (!p.is_zero()) p = p.shifted_by(c.exceptional, -static_cast<long>(m));

    return {m, VectorField(c.target, std::move(comps))};
}

bool is_divisor_invariant(const VectorField& saturated, const BlowupChart& c) {
    if (saturated.vars() != c.target)
        throw structural_error("field not expressed in the chart's target variables");
    const MPoly& comp = saturated.component(c.target.index(c.exceptional));
    return comp.is_zero() || comp.divisible_by(c.exceptional);
}

}  // namespace folint
