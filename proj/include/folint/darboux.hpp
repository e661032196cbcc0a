#ifndef FOLINT_DARBOUX_HPP
#define FOLINT_DARBOUX_HPP

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "folint/ratfun.hpp"

namespace folint {

// R * e^S with R, S rational. S = 0 encodes a plain rational (or polynomial)
// function; R is never identically zero.
class DarbouxFunction {
public:
    explicit DarbouxFunction(RationalFunction prefactor)
        : r_(std::move(prefactor)), s_(RationalFunction::zero(r_.vars())) {
        check_();
    }
    DarbouxFunction(RationalFunction prefactor, RationalFunction exponent)
        : r_(std::move(prefactor)), s_(std::move(exponent)) {
        if (r_.vars() != s_.vars())
            throw structural_error("prefactor and exponent over mismatched variable sets");
        check_();
    }

    const RationalFunction& prefactor() const { return r_; }
    const RationalFunction& exponent() const { return s_; }
    const VarSet& vars() const { return r_.vars(); }
    bool is_plain_rational() const { return s_.is_zero(); }

    friend DarbouxFunction operator*(const DarbouxFunction& a, const DarbouxFunction& b) {
        return DarbouxFunction(a.r_ * b.r_, a.s_ + b.s_);
    }
    DarbouxFunction pow(long e) const { return DarbouxFunction(r_.pow(e), s_ * RationalFunction::constant(vars(), Rat(e))); }

    // Canonical-form equality: prefactors equal as functions and exponents
    // equal as functions (no attempt to move constants between the two).
    friend bool operator==(const DarbouxFunction& a, const DarbouxFunction& b) {
        return a.r_ == b.r_ && a.s_ == b.s_;
    }
    friend bool operator!=(const DarbouxFunction& a, const DarbouxFunction& b) {
        return !(a == b);
    }

    // The exponential-free gradient factor: d(R e^S) = (dR + R dS) e^S,
    // returned per variable. Zero iff the true gradient is zero.
    std::vector<RationalFunction> e_free_gradient() const;

    std::complex<double> eval(std::span<const std::complex<double>> point) const;

    std::string str() const;

private:
    void check_() const {
        if (r_.is_zero()) throw structural_error("Darboux function with zero prefactor");
    }
    RationalFunction r_, s_;
};

DarbouxFunction substitute(const DarbouxFunction& d,
                           const std::map<std::string, RationalFunction>& bindings,
                           const VarSet& target);

struct IndependenceResult {
    bool independent = false;
    // Witness: variable indices of a nonvanishing 2x2 Jacobian minor and the
    // exponential-free minor itself.
    std::optional<std::pair<std::size_t, std::size_t>> minor_vars;
    std::optional<RationalFunction> minor;
};

// Functional independence via Jacobian minors: independent iff some 2x2 minor
// of the derivative matrix of (F, G) is not identically zero.
IndependenceResult independence_witness(const DarbouxFunction& F, const DarbouxFunction& G);

}  // namespace folint

#endif
