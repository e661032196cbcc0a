// CLI contract tests: spawn the installed binary and check streams and exit
// codes. The binary path arrives as argv[1] from CTest.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;
std::filesystem::path g_dir;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    std::filesystem::path out = g_dir / "out.txt";
    std::filesystem::path err = g_dir / "err.txt";
    std::string cmd = g_binary + " " + args + " >" + out.string() + " 2>" + err.string();
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

std::filesystem::path write_file(const std::string& name, const std::string& content) {
    std::filesystem::path p = g_dir / name;
    std::ofstream f(p);
    f << content;
    return p;
}

}  // namespace

TEST_CASE("verify-integral contract") {
    auto job = write_file("verify.job",
                          "vars: x,y,z\n"
                          "f1: 2*x*y\n"
                          "f2: x^3 + 2*y^2\n"
                          "f3: -2*y*z\n"
                          "integral: (y^2 - x^3)*z^2\n"
                          "integral: x*z\n");
    RunResult ok = run("verify-integral " + job.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("exact zero Lie derivative") != std::string::npos);

    // A corrupted integral is a mathematical failure, not an input error.
    auto bad = write_file("verify_bad.job",
                          "vars: x,y,z\n"
                          "f1: 2*x*y\n"
                          "f2: x^3 + 2*y^2\n"
                          "f3: -2*y*z\n"
                          "integral: (y^2 - x^3)*z^2 + x\n");
    RunResult corrupted = run("verify-integral " + bad.string());
    CHECK(corrupted.exit_code == 1);
    CHECK(corrupted.out.find("nonzero Lie derivative") != std::string::npos);

    // Malformed expressions are input errors.
    auto malformed = write_file("verify_malformed.job",
                                "vars: x,y,z\n"
                                "f1: 2*x*y\n"
                                "f2: x^3 + 2*y^2\n"
                                "f3: -2*y*z\n"
                                "integral: x^-1\n");
    RunResult syntax = run("verify-integral " + malformed.string());
    CHECK(syntax.exit_code == 2);
    CHECK(syntax.out.empty());
    CHECK(syntax.err.find("error") != std::string::npos);

    RunResult missing = run("verify-integral /nonexistent.job");
    CHECK(missing.exit_code == 2);

    RunResult unknown_flag = run("verify-integral --frobnicate 3");
    CHECK(unknown_flag.exit_code == 2);

    // Darboux candidates travel through the same path.
    auto darboux = write_file("verify_darboux.job",
                              "vars: x,y,z\n"
                              "f1: x*(x - 2*y^2 - y)\n"
                              "f2: y*(x - y^2 - y)\n"
                              "f3: -z*(x - y^2 - y)\n"
                              "integral: (x/y)*exp((y^2 + y)/x)\n"
                              "integral: y*z\n");
    RunResult d = run("verify-integral --format json " + darboux.string());
    CHECK(d.exit_code == 0);
    CHECK(d.out.find("\"exact_zero\": true") != std::string::npos);
    CHECK(d.out.find("\"exact_zero\": false") == std::string::npos);
}

TEST_CASE("blowup prints the reduced transform in plain format") {
    auto job = write_file("blowup.job",
                          "vars: x,y,z\n"
                          "function: (y^2 - x^3)/x^2\n");
    RunResult r = run("blowup --chart z-axis-xt " + job.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, r.out.find('\n')) == "t^2 - x");
    CHECK(r.out.find("multiplicity: 0") != std::string::npos);

    auto field = write_file("blowup_field.job",
                            "vars: x,y,z\n"
                            "f1: 2*x*y\n"
                            "f2: x^3 + 2*y^2\n"
                            "f3: -2*y*z\n");
    RunResult f = run("blowup --chart z-axis-xt --format json " + field.string());
    CHECK(f.exit_code == 0);
    CHECK(f.out.find("\"multiplicity\": 1") != std::string::npos);
    CHECK(f.out.find("2*x*t") != std::string::npos);
    CHECK(f.out.find("\"divisor_invariant\": true") != std::string::npos);

    RunResult badchart = run("blowup --chart nope " + job.string());
    CHECK(badchart.exit_code == 2);
}

TEST_CASE("independence exit codes") {
    auto indep = write_file("indep.job",
                            "vars: x,y,z\n"
                            "first: x*z\n"
                            "second: y*z\n");
    CHECK(run("independence " + indep.string()).exit_code == 0);

    auto dep = write_file("dep.job",
                          "vars: x,y,z\n"
                          "first: x*z\n"
                          "second: x*z\n");
    RunResult r = run("independence " + dep.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("dependent") != std::string::npos);
}

TEST_CASE("singular subcommand") {
    auto point = write_file("singular_point.job",
                            "vars: x,y,z\n"
                            "f1: 2*x*y\n"
                            "f2: x^3 + 2*y^2\n"
                            "f3: -2*y*z\n"
                            "point: 0,0,1\n");
    RunResult p = run("singular --format json " + point.string());
    CHECK(p.exit_code == 0);
    CHECK(p.out.find("\"simple\": false") != std::string::npos);

    auto curvejob = write_file("singular_curve.job",
                               "vars: x,y,z\n"
                               "f1: 2*x*y\n"
                               "f2: x^3 + 2*y^2\n"
                               "f3: -2*y*z\n"
                               "curve: 0,0,s\n");
    RunResult c = run("singular " + curvejob.string());
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("every parameter value") != std::string::npos);

    auto nonsing = write_file("singular_off.job",
                              "vars: x,y,z\n"
                              "f1: 2*x*y\n"
                              "f2: x^3 + 2*y^2\n"
                              "f3: -2*y*z\n"
                              "point: 1,1,0\n");
    CHECK(run("singular " + nonsing.string()).exit_code == 1);
}

TEST_CASE("baum-bott subcommand") {
    auto good = write_file("ledger_ok.job",
                           "degree: 0\n"
                           "p1: 1 1\n");
    RunResult g = run("baum-bott " + good.string());
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("consistent") != std::string::npos);

    auto bad = write_file("ledger_bad.job",
                          "degree: 1\n"
                          "p1: 1 1\np2: 1 1\np3: 1 1\np4: 1 1\np5: 1 1\np6: 1 1\np7: 1 1\n");
    RunResult b = run("baum-bott --format json " + bad.string());
    CHECK(b.exit_code == 1);
    CHECK(b.out.find("\"contradiction\": true") != std::string::npos);
}

TEST_CASE("classify-dicritical subcommand") {
    auto none = write_file("pair_none.job",
                           "vars: x,y,z\n"
                           "f: x ^1\n"
                           "f: y ^1\n"
                           "g: z ^1\n"
                           "F: x*y\n"
                           "G: z\n");
    RunResult r = run("classify-dicritical " + none.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("dicritical: false") != std::string::npos);
    CHECK(r.out.find("case: none") != std::string::npos);

    auto wit = write_file("pair_wit.job",
                          "vars: x,y,z\n"
                          "h: z ^(2,1)\n"
                          "f: y^2 - x^3 ^1\n"
                          "g: x ^1\n"
                          "F: (y^2 - x^3)*z^2\n"
                          "G: x*z\n");
    RunResult w = run("classify-dicritical --format json " + wit.string());
    CHECK(w.exit_code == 0);
    CHECK(w.out.find("\"case\": \"case3\"") != std::string::npos);

    auto mismatch = write_file("pair_bad.job",
                               "vars: x,y,z\n"
                               "h: z ^(2,1)\n"
                               "f: y^2 - x^3 ^1\n"
                               "g: x ^1\n"
                               "F: x*y\n"
                               "G: x*z\n");
    CHECK(run("classify-dicritical " + mismatch.string()).exit_code == 2);

    auto unsimplified = write_file("pair_unsimplified.job",
                                   "vars: x,y,z\n"
                                   "h: z ^(1,1)\n"
                                   "f: x ^1\n");
    CHECK(run("classify-dicritical " + unsimplified.string()).exit_code == 2);
}

TEST_CASE("trace and conjugacy subcommands") {
    auto job = write_file("trace.job",
                          "vars: x,y,z\n"
                          "f1: x\n"
                          "f2: y\n"
                          "f3: -z\n"
                          "start: 0.5,0.5,0.5\n"
                          "integral: x*z\n");
    RunResult t = run("trace --format csv " + job.string());
    CHECK(t.exit_code == 0);
    CHECK(t.out.substr(0, 4) == "step");
    CHECK(t.out.find("I0_re") != std::string::npos);

    RunResult tj = run("trace --format json --n-steps 100 " + job.string());
    CHECK(tj.exit_code == 0);
    CHECK(tj.out.find("\"drift\"") != std::string::npos);

    // x alone is not conserved by the radial field.
    auto bad = write_file("trace_bad.job",
                          "vars: x,y,z\n"
                          "f1: x\n"
                          "f2: y\n"
                          "f3: -z\n"
                          "start: 0.5,0.5,0.5\n"
                          "integral: x\n");
    CHECK(run("trace " + bad.string()).exit_code == 1);

    RunResult rotated = run("trace --direction 0.6+0.8i --n-steps 200 " + job.string());
    CHECK(rotated.exit_code == 0);

    RunResult conj = run("conjugacy");
    CHECK(conj.exit_code == 0);
    CHECK(conj.out.find("verdict: ok") != std::string::npos);

    RunResult conj_csv = run("conjugacy --format csv");
    CHECK(conj_csv.exit_code == 0);
    CHECK(conj_csv.out.substr(0, 4) == "x_re");
}

TEST_CASE("stdin input and --out") {
    auto job = g_dir / "stdin.job";
    {
        std::ofstream f(job);
        f << "vars: x,y,z\nfirst: x*z\nsecond: y*z\n";
    }
    std::filesystem::path outfile = g_dir / "result.txt";
    RunResult r = run("independence --out " + outfile.string() + " - < " + job.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(outfile).find("independent") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <folint-binary> [doctest args]\n");
        return 1;
    }
    g_binary = argv[1];
    g_dir = std::filesystem::temp_directory_path() / "folint_cli_test";
    std::filesystem::create_directories(g_dir);
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    int rc = ctx.run();
    std::filesystem::remove_all(g_dir);
    return rc;
}
