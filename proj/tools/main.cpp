#include <CLI11.hpp>

#include <iostream>

#include "folint/cli.hpp"
#include "folint/textio.hpp"

int main(int argc, char** argv) {
    CLI::App app{"folint - exact and numeric checks for polynomial vector fields:\n"
                 "first integrals, blow-up transforms, singular-point indices,\n"
                 "and dicritical-surface classification"};
    app.require_subcommand(1);

    folint::JobConfig cfg;
    std::string vars_csv, format = "plain";
    double tol = 0.0;
    bool tol_set = false;

    auto add_common = [&](CLI::App* sub, bool numeric) {
        sub->add_option("inputs", cfg.inputs, "input file(s); '-' reads standard input");
        sub->add_option("--vars", vars_csv, "ordered variable list, e.g. x,y,z");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
        sub->add_option("--out", cfg.out_path, "write results to a file instead of stdout");
        sub->add_option("--tol", tol, "tolerance for pass/fail checks")
            ->each([&](const std::string&) { tol_set = true; });
        if (numeric) {
            sub->add_option("--step", cfg.step, "integration step (<= 1e-2)");
            sub->add_option("--n-steps", cfg.n_steps, "number of integration steps");
            sub->add_option("--escape", cfg.escape, "escape radius");
            sub->add_option("--direction", cfg.direction, "complex-time ray, e.g. 1 or 0.6+0.8i");
        }
        return sub;
    };

    add_common(app.add_subcommand("verify-integral",
                                  "check that candidates are exact first integrals"),
               false);
    add_common(app.add_subcommand("independence", "Jacobian-minor independence test"), false);
    auto* blow = add_common(app.add_subcommand("blowup", "pull a function or field through a chart"),
                            false);
    blow->add_option("--chart", cfg.chart, "chart name (see README)");
    add_common(app.add_subcommand("singular", "singular report at a point, or locus on a curve"),
               false);
    add_common(app.add_subcommand("baum-bott", "global index-sum check for a ledger"), false);
    add_common(app.add_subcommand("classify-dicritical",
                                  "dicritical-surface classification of a factored pair"),
               false);
    add_common(app.add_subcommand("trace", "RK4 leaf trace with conservation drift"), true);
    add_common(app.add_subcommand("conjugacy", "residuals of the chart conjugacy identities"),
               true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (tol_set) cfg.tol = tol;
    if (format == "json")
        cfg.format = folint::OutputFormat::json;
    else if (format == "csv")
        cfg.format = folint::OutputFormat::csv;
    if (!vars_csv.empty()) {
        try {
            cfg.vars = folint::parse_vars(vars_csv);
        } catch (const folint::error& e) {
            std::cerr << "input error: " << e.what() << "\n";
            return 2;
        }
    }

    return folint::run_command(cfg, std::cin, std::cout, std::cerr);
}
