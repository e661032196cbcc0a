#include "folint/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "folint/blowup.hpp"
#include "folint/textio.hpp"

namespace folint {

namespace {

using nlohmann::json;

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json eigen_json(const ExactOrApprox& v) {
    if (v.is_exact()) return json{{"exact", true}, {"value", v.exact_value().str()}};
    return json{{"exact", false}, {"value", json::array({v.value().real(), v.value().imag()})}};
}

void emit(const JobConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out_path.empty() || cfg.out_path == "-") {
        out << text;
        return;
    }
    std::ofstream f(cfg.out_path);
    if (!f) throw input_error("cannot open output file '" + cfg.out_path + "'");
    f << text;
}

KeyValueLines load_input(const JobConfig& cfg, std::istream& in, bool required) {
    if (cfg.inputs.empty()) {
        if (required) throw input_error("command '" + cfg.command + "' needs an input file (or '-')");
        return {};
    }
    if (cfg.inputs.size() > 1) throw input_error("expected a single input file");
    if (cfg.inputs[0] == "-") return read_key_values(in);
    std::ifstream f(cfg.inputs[0]);
    if (!f) throw input_error("cannot open input file '" + cfg.inputs[0] + "'");
    return read_key_values(f);
}

VarSet resolve_vars(const JobConfig& cfg, const KeyValueLines& kv) {
    if (auto v = kv.first("vars")) return parse_vars(*v);
    if (cfg.vars) return *cfg.vars;
    throw input_error("variable set required ('vars:' line or --vars)");
}

std::array<Rat, 3> parse_rat_triple(const std::string& text) {
    std::array<Rat, 3> out;
    std::istringstream ss(text);
    std::string tok;
    std::size_t i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 3) throw input_error("expected three coordinates: '" + text + "'");
        std::string t = tok;
        t.erase(0, t.find_first_not_of(" \t"));
        t.erase(t.find_last_not_of(" \t") + 1);
        out[i++] = Rat::from_string(t);
    }
    if (i != 3) throw input_error("expected three coordinates: '" + text + "'");
    return out;
}

std::array<Cplx, 3> parse_complex_triple(const std::string& text) {
    std::array<Cplx, 3> out;
    std::istringstream ss(text);
    std::string tok;
    std::size_t i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 3) throw input_error("expected three coordinates: '" + text + "'");
        out[i++] = parse_complex(tok);
    }
    if (i != 3) throw input_error("expected three coordinates: '" + text + "'");
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------- //

int cmd_verify_integral(const JobConfig& cfg, std::istream& in, std::ostream& out) {
    KeyValueLines kv = load_input(cfg, in, true);
    VarSet vars = resolve_vars(cfg, kv);
    VectorField field = parse_field_lines(kv, vars);
    std::vector<std::string> exprs = kv.all("integral");
    if (exprs.empty()) throw input_error("no 'integral:' lines to verify");

    bool all_zero = true;
    json results = json::array();
    std::string plain;
    for (const auto& e : exprs) {
        DarbouxFunction d = parse_darboux(e, vars);
        bool zero = darboux_lie_derivative_vanishes(field, d);
        all_zero = all_zero && zero;
        results.push_back(json{{"expression", e}, {"exact_zero", zero}});
        plain += e + ": " + (zero ? "exact zero Lie derivative" : "nonzero Lie derivative") + "\n";
    }
    if (cfg.format == OutputFormat::json)
        emit(cfg, out, dump_json(json{{"command", "verify-integral"}, {"results", results}}));
    else
        emit(cfg, out, plain);
    return all_zero ? 0 : 1;
}

int cmd_independence(const JobConfig& cfg, std::istream& in, std::ostream& out) {
    KeyValueLines kv = load_input(cfg, in, true);
    VarSet vars = resolve_vars(cfg, kv);
    auto f = kv.first("first");
    auto g = kv.first("second");
    if (!f || !g) throw input_error("independence needs 'first:' and 'second:' lines");
    IndependenceResult r = independence_witness(parse_darboux(*f, vars), parse_darboux(*g, vars));

    if (cfg.format == OutputFormat::json) {
        json j{{"command", "independence"}, {"independent", r.independent}};
        if (r.independent) {
            j["minor_variables"] = json::array(
                {vars.name(r.minor_vars->first), vars.name(r.minor_vars->second)});
            j["minor"] = r.minor->str();
        }
        emit(cfg, out, dump_json(j));
    } else {
        std::string plain = r.independent ? "independent" : "dependent";
        if (r.independent)
            plain += " (minor in (" + vars.name(r.minor_vars->first) + "," +
                     vars.name(r.minor_vars->second) + "): " + r.minor->str() + ")";
        emit(cfg, out, plain + "\n");
    }
    return r.independent ? 0 : 1;
}

int cmd_blowup(const JobConfig& cfg, std::istream& in, std::ostream& out) {
    KeyValueLines kv = load_input(cfg, in, true);
    std::string chart_name = cfg.chart;
    if (auto c = kv.first("chart")) chart_name = *c;
    if (chart_name.empty()) throw input_error("blowup needs --chart or a 'chart:' line");
    BlowupChart chart = charts::by_name(chart_name);

    if (auto fn = kv.first("function")) {
        DarbouxFunction d = parse_darboux(*fn, chart.source);
        FunctionPullback pb = pullback_function(chart, d);
        if (cfg.format == OutputFormat::json) {
            emit(cfg, out,
                 dump_json(json{{"command", "blowup"},
                                {"chart", chart.name},
                                {"kind", "function"},
                                {"multiplicity", pb.multiplicity},
                                {"reduced", pb.reduced.str()},
                                {"composed", pb.composed.str()}}));
        } else {
            emit(cfg, out,
                 pb.reduced.str() + "\nmultiplicity: " + std::to_string(pb.multiplicity) + "\n");
        }
        return 0;
    }

    VectorField field = parse_field_lines(kv, chart.source);
    VectorFieldPullback pb = pullback_vector_field(chart, field);
    bool invariant = is_divisor_invariant(pb.saturated, chart);
    if (cfg.format == OutputFormat::json) {
        json comps = json::array();
        for (const auto& c : pb.saturated.components()) comps.push_back(c.str());
        emit(cfg, out,
             dump_json(json{{"command", "blowup"},
                            {"chart", chart.name},
                            {"kind", "field"},
                            {"multiplicity", pb.multiplicity},
                            {"components", comps},
                            {"divisor_invariant", invariant}}));
    } else {
        std::string plain;
        for (std::size_t i = 0; i < pb.saturated.dimension(); ++i)
            plain += "d/d" + chart.target.name(i) + ": " +
                     pb.saturated.component(i).str() + "\n";
        plain += "multiplicity: " + std::to_string(pb.multiplicity) + "\n";
        plain += std::string("divisor-invariant: ") + (invariant ? "true" : "false") + "\n";
        emit(cfg, out, plain);
    }
    return 0;
}

int cmd_singular(const JobConfig& cfg, std::istream& in, std::ostream& out) {
    KeyValueLines kv = load_input(cfg, in, true);
    VarSet vars = resolve_vars(cfg, kv);
    VectorField field = parse_field_lines(kv, vars);

    if (auto pt = kv.first("point")) {
        std::array<Rat, 3> point = parse_rat_triple(*pt);
        if (!is_singular_at(field, point)) {
            emit(cfg, out,
                 cfg.format == OutputFormat::json
                     ? dump_json(json{{"command", "singular"}, {"singular", false}})
                     : std::string("not singular\n"));
            return 1;
        }
        SingularReport rep = linear_part(field, point);
        RatioCheck rc = eigenvalue_ratio_rationality(rep);
        if (cfg.format == OutputFormat::json) {
            json jp = json::array(), lp = json::array(), ev = json::array(), cp = json::array();
            for (const auto& c : rep.point) jp.push_back(c.str());
            for (const auto& row : rep.linear_part) {
                json r = json::array();
                for (const auto& c : row) r.push_back(c.str());
                lp.push_back(r);
            }
            for (const auto& c : rep.char_poly) cp.push_back(c.str());
            for (const auto& e : rep.eigenvalues) ev.push_back(eigen_json(e));
            emit(cfg, out,
                 dump_json(json{{"command", "singular"},
                                {"singular", true},
                                {"point", jp},
                                {"linear_part", lp},
                                {"char_poly", cp},
                                {"eigenvalues", ev},
                                {"simple", rep.simple},
                                {"ratio_check",
                                 json{{"ok", rc.ok}, {"violations", rc.violations}}}}));
        } else {
            std::string plain = "singular point\n";
            plain += "eigenvalues:";
            for (const auto& e : rep.eigenvalues) plain += " " + e.str();
            plain += "\nsimple: " + std::string(rep.simple ? "true" : "false") + "\n";
            plain += "ratio check: " + std::string(rc.ok ? "ok" : "violations") + "\n";
            for (const auto& v : rc.violations) plain += "  " + v + "\n";
            emit(cfg, out, plain);
        }
        return 0;
    }

    if (auto cv = kv.first("curve")) {
        VarSet param{"s"};
        std::map<std::string, MPoly> curve;
        std::istringstream ss(*cv);
        std::string tok;
        std::size_t i = 0;
        while (std::getline(ss, tok, ',')) {
            if (i >= vars.size()) throw input_error("curve has too many components");
            curve.emplace(vars.name(i++), parse_polynomial(tok, param));
        }
        if (i != vars.size()) throw input_error("curve needs one component per variable");
        CurveLocus locus = singular_locus_on_curve(field, curve);
        if (cfg.format == OutputFormat::json) {
            json roots = json::array();
            for (const auto& r : locus.roots) roots.push_back(r.str());
            json j{{"command", "singular"},
                   {"all_parameter_values", locus.all_parameter_values},
                   {"roots", roots}};
            if (locus.residual) {
                json res = json::array();
                for (const auto& c : *locus.residual) res.push_back(c.str());
                j["residual"] = res;
            }
            emit(cfg, out, dump_json(j));
        } else {
            std::string plain;
            if (locus.all_parameter_values) {
                plain = "singular for every parameter value\n";
            } else {
                plain = "roots:";
                for (const auto& r : locus.roots) plain += " " + r.str();
                plain += "\n";
                if (locus.residual) {
                    plain += "residual coefficients:";
                    for (const auto& c : *locus.residual) plain += " " + c.str();
                    plain += "\n";
                }
            }
            emit(cfg, out, plain);
        }
        return 0;
    }

    throw input_error("singular needs a 'point:' or 'curve:' line");
}

int cmd_baum_bott(const JobConfig& cfg, std::istream& in, std::ostream& out) {
    KeyValueLines kv = load_input(cfg, in, true);
    BaumBottLedger ledger = parse_ledger_file(kv);
    GlobalIndexReport rep = baum_bott_global_check(ledger);
    if (cfg.format == OutputFormat::json) {
        emit(cfg, out,
             dump_json(json{{"command", "baum-bott"},
                            {"degree", rep.degree},
                            {"entry_count", rep.entry_count},
                            {"expected_count", rep.expected_count},
                            {"count_ok", rep.count_ok},
                            {"sum", eigen_json(rep.sum)},
                            {"expected_sum", rep.expected_sum.str()},
                            {"sum_ok", rep.sum_ok},
                            {"all_indices_at_least_four", rep.all_indices_at_least_four},
                            {"dicritical_lower_bound", rep.dicritical_lower_bound.str()},
                            {"excess", rep.excess.str()},
                            {"contradiction", rep.contradiction},
                            {"consistent", rep.consistent()}}));
    } else {
        std::string plain;
        plain += "entries: " + std::to_string(rep.entry_count) + " (expected " +
                 std::to_string(rep.expected_count) + ") -> " +
                 (rep.count_ok ? "ok" : "violation") + "\n";
        plain += "index sum: " + rep.sum.str() + " (expected " + rep.expected_sum.str() +
                 ") -> " + (rep.sum_ok ? "ok" : "violation") + "\n";
        if (rep.all_indices_at_least_four) {
            plain += "dicritical lower bound " + rep.dicritical_lower_bound.str() +
                     " vs total " + rep.expected_sum.str() + ": excess " + rep.excess.str() +
                     (rep.contradiction ? " -> contradiction\n" : " -> consistent\n");
        }
        plain += std::string("verdict: ") + (rep.consistent() ? "consistent" : "inconsistent") +
                 "\n";
        emit(cfg, out, plain);
    }
    return rep.consistent() ? 0 : 1;
}

int cmd_classify_dicritical(const JobConfig& cfg, std::istream& in, std::ostream& out) {
    KeyValueLines kv = load_input(cfg, in, true);
    FactoredPairFile file = parse_factored_pair_file(kv, cfg.vars);
    if (file.product_f && !(file.pair.expand_f() == *file.product_f))
        throw input_error("factor list does not multiply to the supplied F");
    if (file.product_g && !(file.pair.expand_g() == *file.product_g))
        throw input_error("factor list does not multiply to the supplied G");

    DicriticalVerdict verdict = classify(file.pair);
    if (cfg.format == OutputFormat::json) {
        json j{{"command", "classify-dicritical"},
               {"dicritical", verdict.dicritical},
               {"case", to_string(verdict.kind)}};
        if (verdict.witness) {
            json expr = json::array();
            for (const auto& t : verdict.witness->expression)
                expr.push_back(json::array({t.factor.str(), t.exponent}));
            j["witness"] = json{{"surface", verdict.witness->surface.str()},
                                {"expression", expr},
                                {"nature", to_string(verdict.witness->nature)}};
        }
        emit(cfg, out, dump_json(j));
    } else {
        std::string plain = "dicritical: " + std::string(verdict.dicritical ? "true" : "false") +
                            "\ncase: " + to_string(verdict.kind) + "\n";
        if (verdict.witness) {
            plain += "surface: " + verdict.witness->surface.str() + " = 0\n";
            plain += "witness: " + verdict.witness->str() + " (" +
                     to_string(verdict.witness->nature) + ")\n";
        }
        emit(cfg, out, plain);
    }
    return 0;
}

int cmd_trace(const JobConfig& cfg, std::istream& in, std::ostream& out) {
    KeyValueLines kv = load_input(cfg, in, true);
    VarSet vars = resolve_vars(cfg, kv);
    VectorField field = parse_field_lines(kv, vars);
    auto start_line = kv.first("start");
    if (!start_line) throw input_error("trace needs a 'start:' line");
    std::array<Cplx, 3> start = parse_complex_triple(*start_line);
    Cplx dir = parse_complex(cfg.direction);
    double mag = std::abs(dir);
    if (mag == 0.0) throw input_error("zero direction");
    dir /= mag;

    std::vector<DarbouxFunction> integrals;
    for (const auto& e : kv.all("integral")) integrals.push_back(parse_darboux(e, vars));

    LeafTrajectory traj = trace_leaf(field, start, dir, cfg.step, cfg.n_steps, cfg.escape);

    double tol = cfg.tol.value_or(1e-6);
    bool ok = true;
    std::vector<DriftResult> drifts;
    for (const auto& d : integrals) {
        drifts.push_back(conservation_drift(traj, d));
        ok = ok && drifts.back().max_relative_drift <= tol && !drifts.back().warning_index;
    }

    if (cfg.format == OutputFormat::csv) {
        emit(cfg, out, trajectory_csv(traj, vars, integrals));
    } else if (cfg.format == OutputFormat::json) {
        json j{{"command", "trace"},
               {"samples", traj.samples.size()},
               {"escaped", traj.escaped}};
        const auto& fin = traj.samples.back().state;
        j["final"] = json::array({json::array({fin[0].real(), fin[0].imag()}),
                                  json::array({fin[1].real(), fin[1].imag()}),
                                  json::array({fin[2].real(), fin[2].imag()})});
        json jd = json::array();
        for (std::size_t i = 0; i < drifts.size(); ++i) {
            json one{{"max_relative_drift", drifts[i].max_relative_drift}};
            if (drifts[i].warning_index) one["warning_index"] = *drifts[i].warning_index;
            jd.push_back(one);
        }
        j["drift"] = jd;
        emit(cfg, out, dump_json(j));
    } else {
        std::string plain = "samples: " + std::to_string(traj.samples.size()) + "\n";
        plain += std::string("escaped: ") + (traj.escaped ? "true" : "false") + "\n";
        const auto& fin = traj.samples.back().state;
        plain += "final: " + fmt(fin[0].real()) + "+" + fmt(fin[0].imag()) + "i, " +
                 fmt(fin[1].real()) + "+" + fmt(fin[1].imag()) + "i, " + fmt(fin[2].real()) +
                 "+" + fmt(fin[2].imag()) + "i\n";
        for (std::size_t i = 0; i < drifts.size(); ++i) {
            plain += "drift I" + std::to_string(i) + ": " + fmt(drifts[i].max_relative_drift);
            if (drifts[i].warning_index)
                plain += " (denominator warning at sample " +
                         std::to_string(*drifts[i].warning_index) + ")";
            plain += "\n";
        }
        emit(cfg, out, plain);
    }
    return ok ? 0 : 1;
}

int cmd_conjugacy(const JobConfig& cfg, std::istream& in, std::ostream& out) {
    KeyValueLines kv = load_input(cfg, in, false);
    auto geti = [&](const char* key, std::size_t dflt) {
        auto v = kv.first(key);
        return v ? static_cast<std::size_t>(std::stoul(*v)) : dflt;
    };
    auto getd = [&](const char* key, double dflt) {
        auto v = kv.first(key);
        return v ? std::stod(*v) : dflt;
    };
    std::size_t nx = geti("nx", 20), nt = geti("nt", 20), nz = geti("nz", 5);
    double xmax = getd("xmax", 0.3), tmin = getd("tmin", 0.5), tmax = getd("tmax", 2.0),
           zmax = getd("zmax", 1.0);
    double tol = cfg.tol.value_or(1e-10);

    auto grid = conjugacy_grid(nx, nt, nz, xmax, tmin, tmax, zmax);
    double max_g = 0.0, max_h = 0.0;
    bool phi3_bound_ok = true;
    std::string csv = "x_re,x_im,t_re,t_im,z_re,z_im,r_g_rel,r_h_rel,phi3_dev,phi3_bound\n";
    for (const auto& [x, t, z] : grid) {
        ConjugacyResiduals r = conjugacy_identity_residuals(x, t, z);
        max_g = std::max(max_g, r.r_g_rel);
        max_h = std::max(max_h, r.r_h_rel);
        double dev = std::abs(phi3(x, t, z) - z);
        double bound = std::abs(t * t * x);
        phi3_bound_ok = phi3_bound_ok && dev <= bound + 1e-300;
        if (x == 0.0) phi3_bound_ok = phi3_bound_ok && dev == 0.0;
        if (cfg.format == OutputFormat::csv) {
            csv += fmt(x.real()) + "," + fmt(x.imag()) + "," + fmt(t.real()) + "," +
                   fmt(t.imag()) + "," + fmt(z.real()) + "," + fmt(z.imag()) + "," +
                   fmt(r.r_g_rel) + "," + fmt(r.r_h_rel) + "," + fmt(dev) + "," + fmt(bound) +
                   "\n";
        }
    }
    bool ok = max_g <= tol && max_h <= tol && phi3_bound_ok;

    if (cfg.format == OutputFormat::csv) {
        emit(cfg, out, csv);
    } else if (cfg.format == OutputFormat::json) {
        emit(cfg, out, dump_json(json{{"command", "conjugacy"},
                                      {"points", grid.size()},
                                      {"max_r_g_rel", max_g},
                                      {"max_r_h_rel", max_h},
                                      {"phi3_bound_ok", phi3_bound_ok},
                                      {"tolerance", tol},
                                      {"ok", ok}}));
    } else {
        std::string plain = "points: " + std::to_string(grid.size()) + "\n";
        plain += "max r_G (relative): " + fmt(max_g) + "\n";
        plain += "max r_H (relative): " + fmt(max_h) + "\n";
        plain += std::string("phi3 bound: ") + (phi3_bound_ok ? "ok" : "violated") + "\n";
        plain += std::string("verdict: ") + (ok ? "ok" : "failed") + "\n";
        emit(cfg, out, plain);
    }
    return ok ? 0 : 1;
}

}  // namespace

int run_command(const JobConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.step <= 0 || cfg.escape <= 0 || (cfg.tol && *cfg.tol <= 0) || cfg.n_steps == 0)
            throw input_error("numeric parameters must be positive");
        if (cfg.command == "verify-integral") return cmd_verify_integral(cfg, in, out);
        if (cfg.command == "independence") return cmd_independence(cfg, in, out);
        if (cfg.command == "blowup") return cmd_blowup(cfg, in, out);
        if (cfg.command == "singular") return cmd_singular(cfg, in, out);
        if (cfg.command == "baum-bott") return cmd_baum_bott(cfg, in, out);
        if (cfg.command == "classify-dicritical") return cmd_classify_dicritical(cfg, in, out);
        if (cfg.command == "trace") return cmd_trace(cfg, in, out);
        if (cfg.command == "conjugacy") return cmd_conjugacy(cfg, in, out);
        throw input_error("unknown command '" + cfg.command + "'");
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const structural_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace folint
