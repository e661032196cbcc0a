#include "folint/mpoly.hpp"

#include <algorithm>

namespace folint {

void MPoly::require_same_vars_(const MPoly& o) const {
    if (vars_ != o.vars_)
        throw structural_error("variable-set mismatch: {" + vars_.str() + "} vs {" +
                               o.vars_.str() + "}");
}

MPoly MPoly::constant(const VarSet& vars, const Rat& c) {
    MPoly p(vars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(vars.size(), 0), c);
    return p;
}

MPoly MPoly::variable(const VarSet& vars, const std::string& name) {
    Monomial m(vars.size(), 0);
    m[vars.index(name)] = 1;
    MPoly p(vars);
    p.terms_.emplace(std::move(m), Rat(1));
    return p;
}

MPoly MPoly::monomial(const VarSet& vars, Monomial m, const Rat& c) {
    if (m.size() != vars.size()) throw structural_error("monomial length mismatch");
    MPoly p(vars);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial(vars_.size(), 0));
}

long MPoly::degree() const {
    if (terms_.empty()) return -1;
    const Monomial& lead = terms_.rbegin()->first;
    long d = 0;
    for (auto e : lead) d += e;
    return d;
}

long MPoly::degree_in(const std::string& v) const {
    std::size_t i = vars_.index(v);
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[i]));
    return d;
}

Rat MPoly::constant_term() const {
    auto it = terms_.find(Monomial(vars_.size(), 0));
    return it == terms_.end() ? Rat(0) : it->second;
}

const Rat& MPoly::leading_coefficient() const {
    if (terms_.empty()) throw structural_error("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

const Monomial& MPoly::leading_monomial() const {
    if (terms_.empty()) throw structural_error("leading monomial of zero polynomial");
    return terms_.rbegin()->first;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    require_same_vars_(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    require_same_vars_(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.require_same_vars_(b);
    MPoly r(a.vars_);
    Monomial m(a.vars_.size(), 0);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r = constant(vars_, Rat(1));
    MPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

MPoly MPoly::derivative(const std::string& v) const {
    std::size_t i = vars_.index(v);
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial dm = m;
        dm[i] -= 1;
        r.add_term(dm, c * Rat(static_cast<long>(m[i])));
    }
    return r;
}

MPoly MPoly::homogeneous_component(long d) const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        long md = 0;
        for (auto e : m) md += e;
        if (md == d) r.terms_.emplace(m, c);
    }
    return r;
}

unsigned MPoly::multiplicity_in(const std::string& v) const {
    std::size_t i = vars_.index(v);
    unsigned k = UINT32_MAX;
    for (const auto& [m, c] : terms_) k = std::min(k, m[i]);
    return terms_.empty() ? 0 : k;
}

std::pair<unsigned, MPoly> MPoly::divide_out_variable(const std::string& v) const {
    if (is_zero())
        throw structural_error("multiplicity of '" + v + "' in the zero polynomial is undefined");
    unsigned k = multiplicity_in(v);
    return {k, shifted_by(v, -static_cast<long>(k))};
}

MPoly MPoly::shifted_by(const std::string& v, long e) const {
    std::size_t i = vars_.index(v);
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        long ne = static_cast<long>(m[i]) + e;
        if (ne < 0) throw structural_error("negative exponent shifting by " + v);
        Monomial nm = m;
        nm[i] = static_cast<std::uint32_t>(ne);
        r.terms_.emplace(std::move(nm), c);
    }
    return r;
}

MPoly MPoly::without_variable(const std::string& v) const {
    std::size_t i = vars_.index(v);
    std::vector<std::string> keep;
    for (std::size_t j = 0; j < vars_.size(); ++j)
        if (j != i) keep.push_back(vars_.name(j));
    MPoly r((VarSet(keep)));
    for (const auto& [m, c] : terms_) {
        if (m[i] != 0) continue;
        Monomial nm;
        nm.reserve(m.size() - 1);
        for (std::size_t j = 0; j < m.size(); ++j)
            if (j != i) nm.push_back(m[j]);
        r.add_term(nm, c);
    }
    return r;
}

Rat MPoly::eval(std::span<const Rat> point) const {
    if (point.size() != vars_.size()) throw structural_error("evaluation point arity mismatch");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t *= point[i].pow(m[i]);
        acc += t;
    }
    return acc;
}

std::complex<double> MPoly::eval(std::span<const std::complex<double>> point) const {
    if (point.size() != vars_.size()) throw structural_error("evaluation point arity mismatch");
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_double();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

Monomial MPoly::content_monomial() const {
    Monomial k(vars_.size(), 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            k = m;
            first = false;
        } else {
            for (std::size_t i = 0; i < k.size(); ++i) k[i] = std::min(k[i], m[i]);
        }
    }
    return k;
}

namespace {

void format_term(std::string& out, const VarSet& vars, const Monomial& m, const Rat& c,
                 bool leading) {
    Rat a = c.abs();
    bool mono_empty = std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
    // A leading "-x^2" would reparse as (-x)^2, so spell the coefficient out
    // whenever the first printed factor carries an exponent.
    bool force_coeff = false;
    if (leading && c.sign() < 0 && a.is_one() && !mono_empty) {
        for (auto e : m) {
            if (e == 0) continue;
            force_coeff = e >= 2;
            break;
        }
    }
    bool coeff_printed = false;
    if (!a.is_one() || mono_empty || force_coeff) {
        out += a.str();
        coeff_printed = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (coeff_printed) out += "*";
        out += vars.name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
        coeff_printed = true;
    }
}

}  // namespace

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (c.sign() < 0) out += "-";
            format_term(out, vars_, m, c, true);
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            format_term(out, vars_, m, c, false);
        }
    }
    return out;
}

int compare_grlex(const MPoly& a, const MPoly& b) {
    GrlexLess less;
    auto ia = a.terms().rbegin(), ea = a.terms().rend();
    auto ib = b.terms().rbegin(), eb = b.terms().rend();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (less(ia->first, ib->first)) return -1;
        if (less(ib->first, ia->first)) return 1;
        if (ia->second < ib->second) return -1;
        if (ib->second < ia->second) return 1;
    }
    if (ia != ea) return 1;
    if (ib != eb) return -1;
    return 0;
}

bool proportional(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.vars() != b.vars() || a.term_count() != b.term_count()) return false;
    return a.scaled(b.leading_coefficient()) == b.scaled(a.leading_coefficient());
}

}  // namespace folint
