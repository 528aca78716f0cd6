// Command-line front end: central-coefficient tables, verification suites,
// and Psi-series computations with JSON I/O.

#include "bcm/json_io.hpp"
#include "bcm/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int max_symbolic_n() {
    const char* env = std::getenv("WORKBENCH_MAX_N");
    if (!env) return 4;
    try {
        int v = std::stoi(env);
        return v >= 1 ? v : 4;
    } catch (...) {
        return 4;
    }
}

int cmd_central(int n, const std::string& out) {
    if (n < 1 || n > max_symbolic_n()) {
        std::cerr << "error: --n " << n << " is outside 1.." << max_symbolic_n() << "\n";
        return 3;
    }
    bcm::io::write_file(out, bcm::io::central_table_json(n));
    return 0;
}

int cmd_verify(const std::string& suite, int n, std::uint64_t seed, int trials, bool fault) {
    if (n < 1 || n > max_symbolic_n()) {
        std::cerr << "error: --n " << n << " is outside 1.." << max_symbolic_n() << "\n";
        return 2;
    }
    bcm::verify::SuiteResult r;
    try {
        r = bcm::verify::run_suite(suite, n, seed, trials, fault);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    bcm::io::Json rep;
    rep["suite"] = r.suite;
    rep["n"] = r.n;
    rep["trials"] = r.trials;
    rep["passed"] = r.passed;
    rep["first_failure"] = r.first_failure;
    std::cout << rep.dump() << "\n";
    return r.passed ? 0 : 1;
}

int cmd_psi(const std::string& point_file, const std::string& qexp_file, int order,
            const std::string& out) {
    if ((point_file.empty()) == (qexp_file.empty())) {
        std::cerr << "error: exactly one of --point / --qexp is required\n";
        return 2;
    }
    bcm::TruncSeries<bcm::Rational> s;
    try {
        if (!point_file.empty()) {
            bcm::calogero::CMPoint pt = bcm::io::cmpoint_from(bcm::io::read_file(point_file));
            s = bcm::calogero::cm_psi(pt, order);
        } else {
            bcm::qexp::QExpSpace w = bcm::io::qexp_from(bcm::io::read_file(qexp_file));
            s = bcm::qexp::qexp_psi(w, order);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    bcm::io::write_file(out, bcm::io::series_json(s));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench: central elements of the rational Cherednik algebra, "
                 "Bethe operator coefficients, Calogero-Moser pairs, quasi-exponential spaces"};
    app.require_subcommand(1);

    auto* central = app.add_subcommand("central", "write the central-coefficient table as JSON");
    int c_n = 0;
    std::string c_out;
    central->add_option("--n", c_n, "number of sites")->required();
    central->add_option("--out", c_out, "output file")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite;
    int v_n = 2;
    std::uint64_t v_seed = 0;
    int v_trials = 20;
    bool v_fault = false;
    verify->add_option("--suite", v_suite, "suite name")
        ->required()
        ->check(CLI::IsMember(bcm::verify::suite_names()));
    verify->add_option("--n", v_n, "number of sites (default 2)");
    verify->add_option("--seed", v_seed, "random seed (default 0)");
    verify->add_option("--trials", v_trials, "random trials (default 20)")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--inject-fault", v_fault,
                     "mutate one relation constant; the suite must then fail");

    auto* psi = app.add_subcommand("psi", "expand a Psi series to a truncation order");
    std::string p_point, p_qexp, p_out;
    int p_order = 8;
    psi->add_option("--point", p_point, "matrix-pair JSON input");
    psi->add_option("--qexp", p_qexp, "quasi-exponential-space JSON input");
    psi->add_option("--order", p_order, "truncation order (default 8)")
        ->check(CLI::NonNegativeNumber);
    psi->add_option("--out", p_out, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (central->parsed()) return cmd_central(c_n, c_out);
        if (verify->parsed()) return cmd_verify(v_suite, v_n, v_seed, v_trials, v_fault);
        if (psi->parsed()) return cmd_psi(p_point, p_qexp, p_order, p_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
