#include "folint/singular.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace folint {

std::string ExactOrApprox::str() const {
    if (is_exact_) return exact_.str();
    char buf[96];
    if (approx_.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", approx_.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", approx_.real(), approx_.imag());
    }
    return buf;
}

bool is_singular_at(const VectorField& v, std::span<const Rat> point) {
    for (const auto& c : v.components())
        if (!c.eval(point).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Univariate helpers (coefficients low to high, no trailing zeros).

namespace {

using UPoly = std::vector<Rat>;

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long udeg(const UPoly& p) { return static_cast<long>(p.size()) - 1; }

Rat ueval(const UPoly& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> ueval(const std::vector<std::complex<double>>& p, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly umonic(UPoly p) {
    trim(p);
    if (p.empty()) return p;
    Rat inv = p.back().inverse();
    for (auto& c : p) c *= inv;
    return p;
}

UPoly urem(UPoly a, const UPoly& b) {
    trim(a);
    while (udeg(a) >= udeg(b) && !a.empty()) {
        Rat q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(std::move(a));
}

// Divides p by (x - r); p(r) must be 0.
UPoly udeflate(const UPoly& p, const Rat& r) {
    UPoly q(p.size() - 1, Rat(0));
    Rat carry(0);
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

// Positive divisors by trial division; empty when n exceeds the bound, in
// which case the caller falls back to numeric roots or an unfactored residual.
std::vector<mpz_class> small_divisors(const mpz_class& n_in) {
    mpz_class n = ::abs(n_in);
    if (n == 0 || !n.fits_ulong_p()) return {};
    unsigned long v = n.get_ui();
    if (v > 1000000000000ul) return {};
    std::vector<mpz_class> divs;
    for (unsigned long d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            divs.emplace_back(d);
            if (v / d != d) divs.emplace_back(v / d);
        }
    }
    return divs;
}

// Extracts rational roots with multiplicity (zero roots included); the
// returned polynomial has no rational roots left. May leave roots behind when
// divisor enumeration is infeasible; callers treat the remainder numerically.
std::pair<std::vector<Rat>, UPoly> rational_roots(UPoly p) {
    trim(p);
    std::vector<Rat> roots;
    if (p.empty() || udeg(p) == 0) return {roots, p};

    while (!p.empty() && p.front().is_zero()) {
        roots.emplace_back(0);
        p.erase(p.begin());
    }

    while (udeg(p) >= 1) {
        // Clear to integer coefficients.
        mpz_class scale = 1;
        for (const auto& c : p) scale = scale / gcd(scale, c.den()) * c.den();
        std::vector<mpz_class> ic;
        ic.reserve(p.size());
        for (const auto& c : p) ic.push_back(c.num() * (scale / c.den()));

        std::vector<mpz_class> ps = small_divisors(ic.front());
        std::vector<mpz_class> qs = small_divisors(ic.back());
        if (ps.empty() || qs.empty()) break;

        bool found = false;
        for (const auto& pn : ps) {
            for (const auto& qd : qs) {
                for (int sign = 1; sign >= -1 && !found; sign -= 2) {
                    Rat cand(sign < 0 ? mpz_class(-pn) : pn, qd);
                    if (ueval(p, cand).is_zero()) {
                        roots.push_back(cand);
                        p = udeflate(p, cand);
                        trim(p);
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
        if (!p.empty() && p.front().is_zero()) {
            // Deflation can re-expose a zero root only if the original had it,
            // which was already stripped; guard regardless.
            while (!p.empty() && p.front().is_zero()) {
                roots.emplace_back(0);
                p.erase(p.begin());
            }
        }
    }
    return {roots, p};
}

std::vector<std::complex<double>> durand_kerner(const std::vector<double>& monic) {
    // monic: coefficients c0..c_{n-1} of x^n + sum c_i x^i.
    std::size_t n = monic.size();
    std::vector<std::complex<double>> c(monic.begin(), monic.end());
    c.emplace_back(1.0);
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9), w = seed;
    for (auto& zi : z) {
        zi = w;
        w *= seed;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> num = ueval(c, z[i]);
            std::complex<double> den = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            std::complex<double> step = num / den;
            z[i] -= step;
            moved = std::max(moved, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (moved < 1e-15) break;
    }
    return z;
}

}  // namespace

// ---------------------------------------------------------------------------

CurveLocus singular_locus_on_curve(const VectorField& v,
                                   const std::map<std::string, MPoly>& curve) {
    if (curve.empty()) throw structural_error("empty curve parametrization");
    VarSet param = curve.begin()->second.vars();
    if (param.size() != 1)
        throw structural_error("curve parametrization must use exactly one parameter");
    std::map<std::string, RationalFunction> bind;
    for (const auto& [var, p] : curve) {
        if (p.vars() != param)
            throw structural_error("curve components over mismatched parameter sets");
        bind.emplace(var, RationalFunction(p));
    }

    std::vector<UPoly> restrictions;
    for (const auto& comp : v.components()) {
        RationalFunction r = substitute(comp, bind, param);
        if (!r.is_polynomial())
            throw structural_error("curve restriction is not polynomial");
        UPoly u(static_cast<std::size_t>(std::max(r.num().degree(), 0L)) + 1, Rat(0));
        for (const auto& [m, c] : r.num().terms()) u[m[0]] = c;
        trim(u);
        if (!u.empty()) restrictions.push_back(std::move(u));
    }

    CurveLocus out;
    if (restrictions.empty()) {
        out.all_parameter_values = true;
        return out;
    }
    UPoly g = restrictions.front();
    for (std::size_t i = 1; i < restrictions.size(); ++i) g = ugcd(g, restrictions[i]);

    auto [roots, residual] = rational_roots(std::move(g));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    out.roots = std::move(roots);
    if (udeg(residual) >= 1) out.residual = std::move(residual);
    return out;
}

SingularReport linear_part(const VectorField& v, const std::array<Rat, 3>& point) {
    if (v.dimension() != 3) throw structural_error("linear part implemented for 3 variables");
    if (!is_singular_at(v, point))
        throw domain_error("linearization requested at a non-singular point");

    SingularReport rep;
    rep.point = point;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            rep.linear_part[i][j] = v.component(i).derivative(v.vars().name(j)).eval(point);

    const auto& a = rep.linear_part;
    Rat tr = a[0][0] + a[1][1] + a[2][2];
    Rat m2 = a[0][0] * a[1][1] - a[0][1] * a[1][0] + a[0][0] * a[2][2] - a[0][2] * a[2][0] +
             a[1][1] * a[2][2] - a[1][2] * a[2][1];
    Rat det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
              a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
              a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    rep.char_poly = {-det, m2, -tr, Rat(1)};

    UPoly chi(rep.char_poly.begin(), rep.char_poly.end());
    auto [rats, residual] = rational_roots(chi);
    for (const auto& r : rats) rep.eigenvalues.push_back(ExactOrApprox::exact(r));

    if (udeg(residual) >= 1) {
        UPoly monic = umonic(residual);
        std::vector<double> cd;
        for (std::size_t i = 0; i + 1 < monic.size(); ++i) cd.push_back(monic[i].to_double());
        std::vector<std::complex<double>> zs;
        if (cd.size() == 2) {
            std::complex<double> b = cd[1], c = cd[0];
            std::complex<double> disc = std::sqrt(b * b - 4.0 * c);
            zs = {(-b + disc) / 2.0, (-b - disc) / 2.0};
        } else {
            zs = durand_kerner(cd);
        }
        double scale = 0.0;
        for (const auto& c : rep.char_poly) scale = std::max(scale, std::fabs(c.to_double()));
        std::vector<std::complex<double>> full = {rep.char_poly[0].to_double(),
                                                  rep.char_poly[1].to_double(),
                                                  rep.char_poly[2].to_double(), 1.0};
        for (auto z : zs) {
            if (std::abs(ueval(full, z)) > 1e-9 * scale)
                throw error("eigenvalue residual check failed");
            rep.eigenvalues.push_back(ExactOrApprox::approx(z));
        }
    }

    std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
              [](const ExactOrApprox& a, const ExactOrApprox& b) {
                  auto va = a.value(), vb = b.value();
                  if (va.real() != vb.real()) return va.real() < vb.real();
                  if (va.imag() != vb.imag()) return va.imag() < vb.imag();
                  return a.is_exact() && !b.is_exact();
              });

    rep.simple = false;
    for (const auto& e : rep.eigenvalues)
        if (!e.is_zero()) rep.simple = true;
    return rep;
}

RatioCheck eigenvalue_ratio_rationality(const SingularReport& report) {
    RatioCheck out;
    const auto& ev = report.eigenvalues;
    for (std::size_t i = 0; i < ev.size(); ++i) {
        for (std::size_t j = i + 1; j < ev.size(); ++j) {
            bool zi = ev[i].is_zero(), zj = ev[j].is_zero();
            if (zi != zj) {
                out.ok = false;
                out.violations.push_back("mixed zero/nonzero pair (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
            } else if (!zi && (!ev[i].is_exact() || !ev[j].is_exact())) {
                out.ok = false;
                out.violations.push_back("undecidable-approximate (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
            }
            // Two exact nonzero rationals always have a rational ratio.
        }
    }
    return out;
}

ExactOrApprox baum_bott(const ExactOrApprox& l1, const ExactOrApprox& l2) {
    if (l1.is_zero() || l2.is_zero())
        throw domain_error("Baum-Bott index needs nonzero eigenvalues");
    if (l1.is_exact() && l2.is_exact()) {
        Rat r = l1.exact_value() / l2.exact_value();
        return ExactOrApprox::exact(r + r.inverse() + Rat(2));
    }
    std::complex<double> a = l1.value(), b = l2.value();
    if (a == 0.0 || b == 0.0) throw domain_error("Baum-Bott index needs nonzero eigenvalues");
    std::complex<double> r = a / b;
    return ExactOrApprox::approx(r + 1.0 / r + 2.0);
}

GlobalIndexReport baum_bott_global_check(const BaumBottLedger& ledger) {
    GlobalIndexReport rep;
    rep.degree = ledger.degree;
    mpz_class k = ledger.degree;
    rep.expected_count = mpz_class(1 + k + k * k).get_ui();
    rep.entry_count = ledger.entries.size();
    rep.count_ok = rep.entry_count == rep.expected_count;
    rep.expected_sum = Rat(mpz_class((k + 2) * (k + 2)), mpz_class(1));
    rep.dicritical_lower_bound = Rat(mpz_class(4 * (k * k + k + 1)), mpz_class(1));
    rep.excess = rep.dicritical_lower_bound - rep.expected_sum;

    bool all_exact = true;
    Rat exact_sum(0);
    std::complex<double> approx_sum = 0.0;
    rep.all_indices_at_least_four = true;
    for (const auto& e : ledger.entries) {
        ExactOrApprox bb = baum_bott(e.l1, e.l2);
        if (bb.is_exact()) {
            exact_sum += bb.exact_value();
            approx_sum += bb.value();
            if (bb.exact_value() < Rat(4)) rep.all_indices_at_least_four = false;
        } else {
            all_exact = false;
            approx_sum += bb.value();
            std::complex<double> v = bb.value();
            double mag = std::max(4.0, std::abs(v));
            if (v.real() < 4.0 - 1e-9 * mag || std::fabs(v.imag()) > 1e-9 * mag)
                rep.all_indices_at_least_four = false;
        }
    }
    if (ledger.entries.empty()) rep.all_indices_at_least_four = false;

    if (all_exact) {
        rep.sum = ExactOrApprox::exact(exact_sum);
        rep.sum_ok = exact_sum == rep.expected_sum;
    } else {
        rep.sum = ExactOrApprox::approx(approx_sum);
        double expect = rep.expected_sum.to_double();
        rep.sum_ok = std::abs(approx_sum - std::complex<double>(expect)) <=
                     1e-9 * std::max(1.0, std::fabs(expect));
    }
    rep.contradiction = rep.all_indices_at_least_four && rep.excess > Rat(0);
    return rep;
}

}  // namespace folint
