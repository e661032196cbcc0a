#ifndef FOLINT_SINGULAR_HPP
#define FOLINT_SINGULAR_HPP

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folint/vfield.hpp"

namespace folint {

// A complex number that is either an exact rational or a double-precision
// approximation, flagged per value. Zeros are always represented exactly.
class ExactOrApprox {
public:
    static ExactOrApprox exact(Rat v) {
        ExactOrApprox e;
        e.exact_ = std::move(v);
        e.is_exact_ = true;
        return e;
    }
    static ExactOrApprox approx(std::complex<double> v) {
        ExactOrApprox e;
        e.approx_ = v;
        e.is_exact_ = false;
        return e;
    }

    bool is_exact() const { return is_exact_; }
    const Rat& exact_value() const {
        if (!is_exact_) throw domain_error("value is approximate");
        return exact_;
    }
    std::complex<double> value() const {
        return is_exact_ ? std::complex<double>(exact_.to_double(), 0.0) : approx_;
    }
    bool is_zero() const { return is_exact_ && exact_.is_zero(); }

    std::string str() const;

private:
    Rat exact_;
    std::complex<double> approx_{};
    bool is_exact_ = true;
};

struct SingularReport {
    std::array<Rat, 3> point;
    std::array<std::array<Rat, 3>, 3> linear_part;  // [i][j] = d_j(component_i) at point
    std::array<Rat, 4> char_poly;                   // monic, low to high degree
    std::vector<ExactOrApprox> eigenvalues;         // sorted by (Re, Im)
    bool simple = false;                            // at least one eigenvalue != 0
};

bool is_singular_at(const VectorField& v, std::span<const Rat> point);

struct CurveLocus {
    bool all_parameter_values = false;   // every point of the curve is singular
    std::vector<Rat> roots;              // exact parameter values, sorted, deduplicated
    // Nontrivial factor whose (non-rational) roots were not extracted,
    // coefficients low to high in the curve parameter.
    std::optional<std::vector<Rat>> residual;
};

// Substitutes a one-parameter polynomial curve into the field and solves the
// common vanishing locus along it. `curve` binds every field variable to a
// polynomial over a single-variable parameter set.
CurveLocus singular_locus_on_curve(const VectorField& v,
                                   const std::map<std::string, MPoly>& curve);

// Jacobian, characteristic polynomial, and eigenvalues at a singular point.
// Rational eigenvalues are extracted exactly; the residual quadratic or cubic
// is solved numerically with a verified residual. Non-singular points are a
// domain error.
SingularReport linear_part(const VectorField& v, const std::array<Rat, 3>& point);

struct RatioCheck {
    bool ok = true;
    std::vector<std::string> violations;
};

// Flags eigenvalue pairs with exactly one zero member and pairs whose
// rationality cannot be decided because a member is approximate.
RatioCheck eigenvalue_ratio_rationality(const SingularReport& report);

// lambda1/lambda2 + lambda2/lambda1 + 2; exact when both inputs are exact.
// Zero eigenvalues are a domain error.
ExactOrApprox baum_bott(const ExactOrApprox& l1, const ExactOrApprox& l2);

struct BaumBottEntry {
    std::string label;
    ExactOrApprox l1, l2;
};

struct BaumBottLedger {
    unsigned degree = 0;
    std::vector<BaumBottEntry> entries;
};

struct GlobalIndexReport {
    unsigned degree = 0;
    std::size_t entry_count = 0;
    std::size_t expected_count = 0;  // 1 + k + k^2
    bool count_ok = false;
    ExactOrApprox sum = ExactOrApprox::exact(Rat(0));
    Rat expected_sum;  // (k + 2)^2
    bool sum_ok = false;
    bool all_indices_at_least_four = false;
    Rat dicritical_lower_bound;  // 4(k^2 + k + 1)
    Rat excess;                  // lower bound minus expected sum; identically 3k^2
    bool contradiction = false;  // all >= 4 and the lower bound exceeds (k+2)^2

    bool consistent() const { return count_ok && sum_ok; }
};

GlobalIndexReport baum_bott_global_check(const BaumBottLedger& ledger);

}  // namespace folint

#endif
