#include "folint/dicritical.hpp"

#include <algorithm>
#include <numeric>

namespace folint {

namespace {

void check_factor(const MPoly& f, const VarSet& vars, const char* which) {
    if (f.vars() != vars)
        throw structural_error(std::string(which) + " factor over a different variable set");
    if (f.is_zero()) throw structural_error(std::string(which) + " factor is zero");
    if (f.degree() == 0)
        throw structural_error(std::string(which) + " factor '" + f.str() + "' is a unit");
}

}  // namespace

FactoredPair::FactoredPair(VarSet vars, std::vector<Common> common, std::vector<Single> only_f,
                           std::vector<Single> only_g)
    : vars_(std::move(vars)),
      common_(std::move(common)),
      only_f_(std::move(only_f)),
      only_g_(std::move(only_g)) {
    for (const auto& c : common_) {
        check_factor(c.factor, vars_, "common");
        if (c.f_exp == 0 || c.g_exp == 0)
            throw structural_error("common factor with zero exponent");
    }
    for (const auto& s : only_f_) {
        check_factor(s.factor, vars_, "F-only");
        if (s.exp == 0) throw structural_error("factor with zero exponent");
    }
    for (const auto& s : only_g_) {
        check_factor(s.factor, vars_, "G-only");
        if (s.exp == 0) throw structural_error("factor with zero exponent");
    }
    if (only_f_.empty() && only_g_.empty() && common_.size() < 2)
        throw structural_error(
            "with no non-shared factors at least two common factors are required; "
            "the integrals would be dependent otherwise");

    std::vector<const MPoly*> all;
    for (const auto& c : common_) all.push_back(&c.factor);
    for (const auto& s : only_f_) all.push_back(&s.factor);
    for (const auto& s : only_g_) all.push_back(&s.factor);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (proportional(*all[i], *all[j]))
                throw structural_error("listed factors '" + all[i]->str() + "' and '" +
                                       all[j]->str() + "' are proportional");
}

MPoly FactoredPair::expand_f() const {
    MPoly p = MPoly::constant(vars_, Rat(1));
    for (const auto& c : common_) p *= c.factor.pow(c.f_exp);
    for (const auto& s : only_f_) p *= s.factor.pow(s.exp);
    return p;
}

MPoly FactoredPair::expand_g() const {
    MPoly p = MPoly::constant(vars_, Rat(1));
    for (const auto& c : common_) p *= c.factor.pow(c.g_exp);
    for (const auto& s : only_g_) p *= s.factor.pow(s.exp);
    return p;
}

FactoredPair normalize_ordering(FactoredPair fp) {
    std::vector<FactoredPair::Common> cs = fp.common();
    std::stable_sort(cs.begin(), cs.end(),
                     [](const FactoredPair::Common& a, const FactoredPair::Common& b) {
                         Rat ra = a.ratio(), rb = b.ratio();
                         if (ra != rb) return ra < rb;
                         return compare_grlex(a.factor, b.factor) < 0;
                     });
    return FactoredPair(fp.vars(), std::move(cs), fp.only_f(), fp.only_g());
}

std::size_t count_strict_inequalities(const FactoredPair& fp) {
    std::size_t n = 0;
    const auto& cs = fp.common();
    for (std::size_t i = 0; i + 1 < cs.size(); ++i)
        if (cs[i].ratio() < cs[i + 1].ratio()) ++n;
    return n;
}

std::string to_string(DicriticalCase c) {
    switch (c) {
        case DicriticalCase::none: return "none";
        case DicriticalCase::case1: return "case1";
        case DicriticalCase::case2: return "case2";
        case DicriticalCase::case3: return "case3";
    }
    return "?";
}

std::string to_string(WitnessNature n) {
    switch (n) {
        case WitnessNature::constant: return "constant";
        case WitnessNature::holomorphic: return "holomorphic";
        case WitnessNature::meromorphic_nonholomorphic: return "meromorphic-nonholomorphic";
    }
    return "?";
}

MPoly MeromorphicWitness::numerator() const {
    MPoly p = MPoly::constant(surface.vars(), Rat(1));
    for (const auto& fp : expression)
        if (fp.exponent > 0) p *= fp.factor.pow(static_cast<unsigned>(fp.exponent));
    return p;
}

MPoly MeromorphicWitness::denominator() const {
    MPoly p = MPoly::constant(surface.vars(), Rat(1));
    for (const auto& fp : expression)
        if (fp.exponent < 0) p *= fp.factor.pow(static_cast<unsigned>(-fp.exponent));
    return p;
}

std::string MeromorphicWitness::str() const {
    if (expression.empty()) return "1";
    std::string s;
    for (const auto& fp : expression) {
        if (!s.empty()) s += " * ";
        s += "(" + fp.factor.str() + ")^" + std::to_string(fp.exponent);
    }
    return s;
}

namespace {

// Exponent lists of F^a * G^{-b} with the block cancellation built in.
MeromorphicWitness quotient_witness(const FactoredPair& fp, long a, long b,
                                    std::size_t surface_index) {
    MeromorphicWitness w;
    w.surface_index = surface_index;
    w.surface = fp.common().at(surface_index).factor;
    for (const auto& c : fp.common()) {
        long e = static_cast<long>(c.f_exp) * a - static_cast<long>(c.g_exp) * b;
        if (e != 0) w.expression.push_back({c.factor, e});
    }
    for (const auto& s : fp.only_f()) {
        long e = static_cast<long>(s.exp) * a;
        if (e != 0) w.expression.push_back({s.factor, e});
    }
    for (const auto& s : fp.only_g()) {
        long e = -static_cast<long>(s.exp) * b;
        if (e != 0) w.expression.push_back({s.factor, e});
    }
    bool any_neg = false, any_pos = false;
    for (const auto& t : w.expression) {
        any_neg = any_neg || t.exponent < 0;
        any_pos = any_pos || t.exponent > 0;
    }
    if (w.expression.empty())
        w.nature = WitnessNature::constant;
    else if (!any_neg)
        w.nature = WitnessNature::holomorphic;
    else
        w.nature = WitnessNature::meromorphic_nonholomorphic;
    return w;
}

std::pair<long, long> reduced_ratio(const FactoredPair::Common& c) {
    Rat r = c.ratio();
    return {r.num().get_si(), r.den().get_si()};
}

}  // namespace

DicriticalVerdict classify(const FactoredPair& input) {
    FactoredPair fp = normalize_ordering(input);
    const auto& cs = fp.common();
    const std::size_t p = cs.size();
    const std::size_t q = fp.only_f().size();
    const std::size_t r = fp.only_g().size();

    if (p == 0) return {false, DicriticalCase::none, std::nullopt};

    std::size_t strict = count_strict_inequalities(fp);

    if (strict == 0) {
        if (q == 0 && r == 0)
            throw domain_error(
                "all common-factor ratios are equal and there are no other factors: "
                "the two integrals are dependent");
        if (q == 0 || r == 0)
            throw domain_error(
                "not in simplified form: all common-factor ratios are equal but only one "
                "integral has non-shared factors; absorb the common factors first so that "
                "the pair has no common irreducible factor");
        auto [k, l] = reduced_ratio(cs.front());
        return {true, DicriticalCase::case3, quotient_witness(fp, l, k, 0)};
    }

    if (strict == 1) {
        if (q == 0 && r == 0) return {false, DicriticalCase::none, std::nullopt};
        // Split at the single strict jump.
        std::size_t jump = 0;
        for (std::size_t i = 0; i + 1 < p; ++i)
            if (cs[i].ratio() < cs[i + 1].ratio()) jump = i + 1;
        if (q >= 1) {
            auto [k, l] = reduced_ratio(cs[jump]);  // high block
            return {true, DicriticalCase::case2, quotient_witness(fp, l, k, jump)};
        }
        auto [k, l] = reduced_ratio(cs.front());  // low block, roles swapped
        return {true, DicriticalCase::case2, quotient_witness(fp, -l, -k, 0)};
    }

    // Two or more strict inequalities: some ratio lies strictly between the
    // extremes; take the smallest index realizing one.
    std::size_t mid = 0;
    for (std::size_t i = 1; i + 1 < p; ++i) {
        if (cs.front().ratio() < cs[i].ratio() && cs[i].ratio() < cs.back().ratio()) {
            mid = i;
            break;
        }
    }
    if (mid == 0) throw error("no interior ratio despite two strict inequalities");
    long k = static_cast<long>(cs[mid].f_exp);
    long l = static_cast<long>(cs[mid].g_exp);
    return {true, DicriticalCase::case1, quotient_witness(fp, l, k, mid)};
}

MeromorphicWitness restriction_integral(const FactoredPair& fp, std::size_t i) {
    if (i >= fp.common().size())
        throw domain_error("common-factor index out of range");
    const auto& c = fp.common()[i];
    return quotient_witness(fp, static_cast<long>(c.g_exp), static_cast<long>(c.f_exp), i);
}

bool products_match(const FactoredPair& fp, const MPoly& F, const MPoly& G) {
    return fp.expand_f() == F && fp.expand_g() == G;
}

}  // namespace folint
