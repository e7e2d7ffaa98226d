#include <array>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hek/commands.hpp"

namespace {

int emit(const hek::Report& report, bool json) {
    if (json)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text();
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagonal quadric curves of type n, their Kummer surfaces, and moduli"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string mode = "auto";
    double tol = -1.0;
    std::uint64_t seed = 20240601;
    bool parallel = false;
    bool json = false;
    app.add_option("--mode", mode, "arithmetic backend: exact|numeric|auto")
        ->check(CLI::IsMember({"exact", "numeric", "auto"}));
    app.add_option("--tol", tol, "numeric tolerance (zero and matching thresholds)");
    app.add_option("--seed", seed, "seed for fixture generation");
    app.add_flag("--parallel", parallel, "run independent checks on multiple threads");
    app.add_flag("--json", json, "emit the report as JSON instead of text");

    auto* lines = app.add_subcommand(
        "lines", "construct the 32 lines for six branch values and verify the configuration");
    std::vector<std::string> avals;
    lines->add_option("a", avals, "six distinct rationals a_0..a_5")->expected(6);

    auto* normalize = app.add_subcommand(
        "normalize", "put a type-5 coefficient matrix in normal form (JSON file input)");
    std::string curve_file;
    normalize->add_option("file", curve_file, "curve file with fields n, coeffs[, lambdas]")
        ->required();

    auto* iso = app.add_subcommand(
        "iso", "decide moduli equivalence of two lambda tuples and print a witness");
    iso->positionals_at_end();
    int iso_n = 5;
    iso->add_option("--n", iso_n, "curve type (odd, >= 5)");
    std::vector<std::string> iso_vals;
    iso->add_option("values", iso_vals, "n-2 lambdas per side, lhs then rhs, '--' between");

    auto* verify = app.add_subcommand(
        "verify-all", "full pipeline for one lambda triple: lines, recovery, branch data, counts");
    std::vector<std::string> lambda_vals;
    verify->add_option("lambda", lambda_vals, "three lambdas, distinct and not in {0, 1}")
        ->expected(3);

    auto* fixtures = app.add_subcommand(
        "fixtures", "generate a deterministic corpus of branch sextuples and lambda triples");
    int count = 5;
    std::string out_path;
    fixtures->add_option("--count", count, "entries per list");
    fixtures->add_option("--out", out_path, "write the corpus JSON to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    hek::RunConfig cfg;
    cfg.mode = hek::parse_mode(mode);
    if (tol > 0) {
        cfg.tol.eps_zero = tol;
        cfg.tol.eps_match = tol;
    }
    cfg.seed = seed;
    cfg.parallel = parallel;

    try {
        if (lines->parsed()) {
            std::array<std::string, 6> a;
            std::copy_n(avals.begin(), 6, a.begin());
            return emit(hek::cmd_lines(a, cfg), json);
        }
        if (normalize->parsed()) return emit(hek::cmd_normalize(curve_file, cfg), json);
        if (iso->parsed()) return emit(hek::cmd_iso(iso_n, iso_vals, cfg), json);
        if (verify->parsed()) {
            std::array<std::string, 3> l;
            std::copy_n(lambda_vals.begin(), 3, l.begin());
            return emit(hek::cmd_verify_all(l, cfg), json);
        }
        if (fixtures->parsed()) return emit(hek::cmd_fixtures(seed, count, out_path, cfg), json);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
