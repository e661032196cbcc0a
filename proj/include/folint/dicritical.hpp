#ifndef FOLINT_DICRITICAL_HPP
#define FOLINT_DICRITICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "folint/mpoly.hpp"
#include "folint/rat.hpp"

namespace folint {

// Two first integrals F, G presented by their irreducible-factor lists:
//   F = prod h_i^{k_i} * prod f_j^{alpha_j}
//   G = prod h_i^{l_i} * prod g_m^{beta_m}
// Factorization is never computed here; the lists are input. Units are
// rejected and listed factors are spot-checked for pairwise non-proportionality.
class FactoredPair {
public:
    struct Common {
        MPoly factor;
        unsigned f_exp;  // k_i, exponent in F
        unsigned g_exp;  // l_i, exponent in G
        Rat ratio() const { return Rat(static_cast<long>(f_exp), static_cast<long>(g_exp)); }
    };
    struct Single {
        MPoly factor;
        unsigned exp;
    };

    FactoredPair(VarSet vars, std::vector<Common> common, std::vector<Single> only_f,
                 std::vector<Single> only_g);

    const VarSet& vars() const { return vars_; }
    const std::vector<Common>& common() const { return common_; }
    const std::vector<Single>& only_f() const { return only_f_; }
    const std::vector<Single>& only_g() const { return only_g_; }

    MPoly expand_f() const;
    MPoly expand_g() const;

private:
    VarSet vars_;
    std::vector<Common> common_;
    std::vector<Single> only_f_, only_g_;
};

// Common factors sorted by k_i/l_i ascending; ties broken by the graded-lex
// order of the factor polynomials.
FactoredPair normalize_ordering(FactoredPair fp);

// Number of indices i with k_i/l_i < k_{i+1}/l_{i+1} in the normalized order.
std::size_t count_strict_inequalities(const FactoredPair& fp);

enum class DicriticalCase { none, case1, case2, case3 };
std::string to_string(DicriticalCase c);

enum class WitnessNature { constant, holomorphic, meromorphic_nonholomorphic };
std::string to_string(WitnessNature n);

struct FactorPower {
    MPoly factor;
    long exponent;  // signed; never zero
};

// A first integral of the restriction to {surface = 0}, kept in product form.
struct MeromorphicWitness {
    std::size_t surface_index = 0;  // into the normalized common list
    MPoly surface = MPoly::zero(VarSet());
    std::vector<FactorPower> expression;
    WitnessNature nature = WitnessNature::constant;

    MPoly numerator() const;    // product over positive exponents
    MPoly denominator() const;  // product over negated negative exponents
    std::string str() const;
};

struct DicriticalVerdict {
    bool dicritical = false;
    DicriticalCase kind = DicriticalCase::none;
    std::optional<MeromorphicWitness> witness;
};

// Decides existence of a dicritical invariant surface from the exponent
// combinatorics. Requires simplified form: with all ratios equal and p >= 1,
// both factor-only lists must be nonempty (domain_error otherwise).
DicriticalVerdict classify(const FactoredPair& fp);

// The quotient F^{l_i}/G^{k_i} with the i-th common factor cancelled,
// classified by sign inspection of the remaining exponents. The index refers
// to fp.common() as given.
MeromorphicWitness restriction_integral(const FactoredPair& fp, std::size_t i);

// Checks that the factor lists really multiply to the supplied products.
bool products_match(const FactoredPair& fp, const MPoly& F, const MPoly& G);

}  // namespace folint

#endif
