#ifndef FOLINT_MPOLY_HPP
#define FOLINT_MPOLY_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "folint/rat.hpp"
#include "folint/varset.hpp"

namespace folint {

// Exponent vector; length equals the size of the owning variable set.
using Monomial = std::vector<std::uint32_t>;

// Graded-lexicographic order: total degree first, ties by exponents
// left to right (so the first variable is the largest).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// Sparse multivariate polynomial over exact rationals. Zero coefficients are
// never stored; the variable set is fixed at construction. Immutable in
// practice: all operations return new values.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexLess>;

    explicit MPoly(VarSet vars) : vars_(std::move(vars)) {}

    static MPoly zero(const VarSet& vars) { return MPoly(vars); }
    static MPoly constant(const VarSet& vars, const Rat& c);
    static MPoly variable(const VarSet& vars, const std::string& name);
    static MPoly monomial(const VarSet& vars, Monomial m, const Rat& c);

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    long degree() const;
    long degree_in(const std::string& v) const;

    Rat constant_term() const;
    // Leading coefficient / monomial in graded-lex order.
    const Rat& leading_coefficient() const;
    const Monomial& leading_monomial() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const Rat& c) const;
    MPoly pow(unsigned e) const;

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Exact formal partial derivative.
    MPoly derivative(const std::string& v) const;

    // Sum of the terms of total degree exactly d.
    MPoly homogeneous_component(long d) const;

    // Writes p = v^k * q with v not dividing q, k maximal. p must be nonzero.
    std::pair<unsigned, MPoly> divide_out_variable(const std::string& v) const;
    // Largest k with v^k dividing p (0 for p = 0 by convention is rejected upstream).
    unsigned multiplicity_in(const std::string& v) const;
    bool divisible_by(const std::string& v) const { return !is_zero() && multiplicity_in(v) > 0; }

    // Exact product by v^e (e may be negative if v^{-e} divides).
    MPoly shifted_by(const std::string& v, long e) const;

    // Sets one variable to zero, dropping it from the variable set.
    MPoly without_variable(const std::string& v) const;

    Rat eval(std::span<const Rat> point) const;
    std::complex<double> eval(std::span<const std::complex<double>> point) const;

    // Componentwise minimum exponent over all terms (the monomial content).
    Monomial content_monomial() const;

    // Terms in descending graded-lex order; reparses through the expression
    // grammar to the same polynomial.
    std::string str() const;

    void add_term(const Monomial& m, const Rat& c);  // accumulates, purging zeros

private:
    void require_same_vars_(const MPoly& o) const;
    VarSet vars_;
    TermMap terms_;
};

// Total order on polynomials used for deterministic tie-breaking: compares
// term sequences in descending graded-lex order, coefficients last.
int compare_grlex(const MPoly& a, const MPoly& b);

// True when a = c*b for a nonzero rational c (both nonzero).
bool proportional(const MPoly& a, const MPoly& b);

}  // namespace folint

#endif
