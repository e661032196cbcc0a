#ifndef FOLINT_RATFUN_HPP
#define FOLINT_RATFUN_HPP

#include <complex>
#include <map>
#include <string>

#include "folint/mpoly.hpp"

namespace folint {

// Quotient of polynomials over a shared variable set. Canonical form: numerator
// and denominator are divided by their common monomial content, then scaled so
// the denominator's graded-lex leading coefficient is 1. No multivariate gcd is
// attempted; equality is decided by cross-multiplication.
class RationalFunction {
public:
    explicit RationalFunction(MPoly num)
        : num_(std::move(num)), den_(MPoly::constant(num_.vars(), Rat(1))) {
        canonicalize_();
    }
    RationalFunction(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.vars() != den_.vars())
            throw structural_error("rational function over mismatched variable sets");
        if (den_.is_zero()) throw structural_error("zero denominator");
        canonicalize_();
    }

    static RationalFunction zero(const VarSet& vars) {
        return RationalFunction(MPoly::zero(vars));
    }
    static RationalFunction constant(const VarSet& vars, const Rat& c) {
        return RationalFunction(MPoly::constant(vars, c));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const VarSet& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_ == MPoly::constant(vars(), Rat(1)); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction pow(long e) const;

    // Equality as functions: num1*den2 = num2*den1 exactly.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    // Quotient-rule derivative.
    RationalFunction derivative(const std::string& v) const;

    std::complex<double> eval(std::span<const std::complex<double>> point) const;

    // "num" when the denominator is 1, else "(num)/(den)".
    std::string str() const;

private:
    void canonicalize_();
    MPoly num_, den_;
};

// Exact composition: every variable of p must be bound; the result lives over
// `target`. A denominator that vanishes identically is a structural error.
RationalFunction substitute(const MPoly& p,
                            const std::map<std::string, RationalFunction>& bindings,
                            const VarSet& target);
RationalFunction substitute(const RationalFunction& f,
                            const std::map<std::string, RationalFunction>& bindings,
                            const VarSet& target);

}  // namespace folint

#endif
