#include "folint/textio.hpp"

#include <cctype>
#include <sstream>

namespace folint {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

std::optional<std::string> KeyValueLines::first(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return v;
    return std::nullopt;
}

std::vector<std::string> KeyValueLines::all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries)
        if (k == key) out.push_back(v);
    return out;
}

KeyValueLines read_key_values(std::istream& in) {
    KeyValueLines kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw input_error("line " + std::to_string(lineno) + ": expected 'key: value'");
        kv.entries.emplace_back(trimmed(t.substr(0, colon)), trimmed(t.substr(colon + 1)));
    }
    return kv;
}

VarSet parse_vars(const std::string& csv) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            std::string n = trimmed(cur);
            if (!n.empty()) names.push_back(n);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (names.empty()) throw input_error("empty variable list");
    return VarSet(names);
}

Cplx parse_complex(const std::string& text) {
    std::string t = trimmed(text);
    if (t.empty()) throw input_error("empty number");
    // Forms: "a", "bi", "a+bi", "a-bi".
    bool imag_only = t.back() == 'i' || t.back() == 'I';
    if (!imag_only) {
        std::size_t pos = 0;
        double re = std::stod(t, &pos);
        if (pos != t.size()) throw input_error("bad number '" + text + "'");
        return {re, 0.0};
    }
    std::string body = t.substr(0, t.size() - 1);
    // Split at the last top-level + or - that is not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        std::string imag = body.empty() || body == "+" || body == "-" ? body + "1" : body;
        std::size_t pos = 0;
        double im = std::stod(imag, &pos);
        if (pos != imag.size()) throw input_error("bad number '" + text + "'");
        return {0.0, im};
    }
    std::size_t pos = 0;
    double re = std::stod(body.substr(0, split), &pos);
    if (pos != split) throw input_error("bad number '" + text + "'");
    std::string imag = body.substr(split);
    if (imag == "+" || imag == "-") imag += "1";
    pos = 0;
    double im = std::stod(imag, &pos);
    if (pos != imag.size()) throw input_error("bad number '" + text + "'");
    return {re, im};
}

VectorField parse_field_lines(const KeyValueLines& kv, const VarSet& vars) {
    std::vector<MPoly> comps;
    for (const char* key : {"f1", "f2", "f3"}) {
        auto v = kv.first(key);
        if (!v) {
            if (comps.size() == vars.size()) break;
            throw input_error(std::string("missing field component '") + key + ":'");
        }
        comps.push_back(parse_polynomial(*v, vars));
    }
    if (comps.size() != vars.size())
        throw input_error("field needs one component per variable");
    return VectorField(vars, std::move(comps));
}

namespace {

// "<expr> ^(k,l)" or "<expr> ^a": the exponent is everything after the last " ^".
std::pair<std::string, std::string> split_factor_line(const std::string& v) {
    std::size_t pos = v.rfind(" ^");
    if (pos == std::string::npos)
        throw input_error("factor line needs an exponent: '" + v + "'");
    return {trimmed(v.substr(0, pos)), trimmed(v.substr(pos + 2))};
}

unsigned parse_positive(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw input_error("expected a positive integer, got '" + s + "'");
    unsigned long v = std::stoul(s);
    if (v == 0 || v > 1000000) throw input_error("exponent out of range: '" + s + "'");
    return static_cast<unsigned>(v);
}

}  // namespace

FactoredPairFile parse_factored_pair_file(const KeyValueLines& kv,
                                          const std::optional<VarSet>& vars_override) {
    std::optional<VarSet> vars = vars_override;
    if (auto v = kv.first("vars")) vars = parse_vars(*v);
    if (!vars) throw input_error("variable set required ('vars:' line or --vars)");

    std::vector<FactoredPair::Common> common;
    std::vector<FactoredPair::Single> only_f, only_g;
    for (const auto& line : kv.all("h")) {
        auto [expr, exps] = split_factor_line(line);
        if (exps.size() < 5 || exps.front() != '(' || exps.back() != ')')
            throw input_error("common factor exponent must be '(k,l)': '" + line + "'");
        std::string inner = exps.substr(1, exps.size() - 2);
        std::size_t comma = inner.find(',');
        if (comma == std::string::npos)
            throw input_error("common factor exponent must be '(k,l)': '" + line + "'");
        common.push_back({parse_polynomial(expr, *vars),
                          parse_positive(trimmed(inner.substr(0, comma))),
                          parse_positive(trimmed(inner.substr(comma + 1)))});
    }
    for (const auto& line : kv.all("f")) {
        auto [expr, exps] = split_factor_line(line);
        only_f.push_back({parse_polynomial(expr, *vars), parse_positive(exps)});
    }
    for (const auto& line : kv.all("g")) {
        auto [expr, exps] = split_factor_line(line);
        only_g.push_back({parse_polynomial(expr, *vars), parse_positive(exps)});
    }

    FactoredPairFile out{FactoredPair(*vars, std::move(common), std::move(only_f),
                                      std::move(only_g)),
                         std::nullopt, std::nullopt};
    if (auto f = kv.first("F")) out.product_f = parse_polynomial(*f, *vars);
    if (auto g = kv.first("G")) out.product_g = parse_polynomial(*g, *vars);
    return out;
}

ExactOrApprox parse_eigenvalue(const std::string& tok) {
    std::string t = trimmed(tok);
    bool exact = !t.empty() && t.find_first_not_of("+-/0123456789") == std::string::npos;
    if (exact) return ExactOrApprox::exact(Rat::from_string(t));
    return ExactOrApprox::approx(parse_complex(t));
}

BaumBottLedger parse_ledger_file(const KeyValueLines& kv) {
    BaumBottLedger ledger;
    auto deg = kv.first("degree");
    if (!deg) throw input_error("ledger needs a 'degree:' line");
    {
        const std::string& s = *deg;
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            throw input_error("degree must be a non-negative integer");
        ledger.degree = static_cast<unsigned>(std::stoul(s));
    }
    for (const auto& [k, v] : kv.entries) {
        if (k.size() < 2 || k[0] != 'p') continue;
        std::istringstream ss(v);
        std::string a, b, extra;
        if (!(ss >> a >> b) || (ss >> extra))
            throw input_error("ledger line '" + k + "' needs exactly two eigenvalues");
        ledger.entries.push_back({k.substr(1), parse_eigenvalue(a), parse_eigenvalue(b)});
    }
    return ledger;
}

}  // namespace folint
