#include "folint/ratfun.hpp"

namespace folint {

void RationalFunction::canonicalize_() {
    if (num_.is_zero()) {
        den_ = MPoly::constant(vars(), Rat(1));
        return;
    }
    Monomial cn = num_.content_monomial();
    Monomial cd = den_.content_monomial();
    for (std::size_t i = 0; i < cn.size(); ++i) {
        std::uint32_t k = std::min(cn[i], cd[i]);
        if (k == 0) continue;
        const std::string& v = num_.vars().name(i);
        num_ = num_.shifted_by(v, -static_cast<long>(k));
        den_ = den_.shifted_by(v, -static_cast<long>(k));
    }
    Rat lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        Rat inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw structural_error("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw structural_error("negative power of zero");
        return RationalFunction(den_.pow(static_cast<unsigned>(-e)),
                                num_.pow(static_cast<unsigned>(-e)));
    }
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RationalFunction RationalFunction::derivative(const std::string& v) const {
    return RationalFunction(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

std::complex<double> RationalFunction::eval(std::span<const std::complex<double>> point) const {
    return num_.eval(point) / den_.eval(point);
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction substitute(const MPoly& p,
                            const std::map<std::string, RationalFunction>& bindings,
                            const VarSet& target) {
    std::vector<const RationalFunction*> bound(p.vars().size(), nullptr);
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        auto it = bindings.find(p.vars().name(i));
        if (it == bindings.end())
            throw structural_error("unbound variable '" + p.vars().name(i) + "' in substitution");
        if (it->second.vars() != target)
            throw structural_error("binding for '" + p.vars().name(i) +
                                   "' not over the target variable set");
        bound[i] = &it->second;
    }
    RationalFunction acc = RationalFunction::zero(target);
    for (const auto& [m, c] : p.terms()) {
        RationalFunction t = RationalFunction::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t *= bound[i]->pow(m[i]);
        acc += t;
    }
    return acc;
}

RationalFunction substitute(const RationalFunction& f,
                            const std::map<std::string, RationalFunction>& bindings,
                            const VarSet& target) {
    RationalFunction n = substitute(f.num(), bindings, target);
    RationalFunction d = substitute(f.den(), bindings, target);
    if (d.is_zero())
        throw structural_error("substitution produced an identically zero denominator");
    return n / d;
}

}  // namespace folint
