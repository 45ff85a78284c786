// Command-line front end: verification suites, zero finding, continuation
// scans, and boundary recovery, with JSON/CSV report emission.
//
// Exit codes: 0 = every executed report passed, 1 = at least one failed (or a
// runtime evaluation error), 2 = usage / domain error.

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xih/duffin.hpp"
#include "xih/identities.hpp"
#include "xih/report_io.hpp"
#include "xih/specfun.hpp"
#include "xih/types.hpp"

namespace {

std::vector<double> parse_list(const std::string& text, const char* flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw xih::DomainError(std::string(flag) + ": empty list entry");
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw xih::DomainError(std::string(flag) + ": malformed number '" + item + "'");
        }
        if (used != item.size())
            throw xih::DomainError(std::string(flag) + ": malformed number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw xih::DomainError(std::string(flag) + ": empty list");
    return out;
}

std::vector<xih::complex> parse_s_values(const std::vector<std::string>& items) {
    std::vector<xih::complex> out;
    for (const std::string& item : items) {
        std::vector<double> parts = parse_list(item, "--s");
        if (parts.size() > 2) throw xih::DomainError("--s: expected re[,im]");
        out.emplace_back(parts[0], parts.size() == 2 ? parts[1] : 0.0);
    }
    return out;
}

xih::OutputFormat parse_format(const std::string& name) {
    if (name == "json") return xih::OutputFormat::JSON;
    if (name == "csv") return xih::OutputFormat::CSV;
    throw xih::DomainError("--format: expected json or csv");
}

xih::Convention parse_convention(const std::string& name) {
    if (name == "plain") return xih::Convention::PLAIN;
    if (name == "twopi") return xih::Convention::TWO_PI;
    if (name == "auto") return xih::kConvention;  // adjudicated and pinned
    throw xih::DomainError("--convention: expected plain, twopi, or auto");
}

xih::SumMethod parse_method(const std::string& name) {
    if (name == "partial") return xih::SumMethod::PARTIAL;
    if (name == "abel") return xih::SumMethod::ABEL;
    if (name == "cesaro") return xih::SumMethod::CESARO;
    throw xih::DomainError("--scheme: expected partial, abel, or cesaro");
}

struct CommonOpts {
    std::optional<double> rel_tol;
    std::optional<double> abs_tol;
    std::string format = "json";
    std::string out_path;

    void attach(CLI::App* cmd, bool with_tols = true) {
        if (with_tols) {
            cmd->add_option("--rel-tol", rel_tol, "relative pass tolerance override");
            cmd->add_option("--abs-tol", abs_tol, "absolute pass tolerance override");
        }
        cmd->add_option("--format", format, "output format: json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "write output to this path instead of stdout");
    }

    xih::Tolerances gates(xih::Tolerances base) const {
        if (rel_tol) base.rel_tol = *rel_tol;
        if (abs_tol) base.abs_tol = *abs_tol;
        return base;
    }

    void emit(const std::vector<xih::VerificationReport>& reports) const {
        xih::OutputFormat f = parse_format(format);
        if (out_path.empty()) {
            xih::emit_reports(reports, f, std::cout);
        } else {
            xih::emit_reports_to_file(reports, f, out_path);
        }
    }
};

struct SchemeOpts {
    std::string method = "abel";
    std::optional<int> m_max;
    std::optional<int> n_max;

    void attach(CLI::App* cmd) {
        cmd->add_option("--scheme", method, "summation method: partial|abel|cesaro")
            ->check(CLI::IsMember({"partial", "abel", "cesaro"}));
        cmd->add_option("--m-max", m_max, "outer (Moebius) index cap");
        cmd->add_option("--n-max", n_max, "inner index cap");
    }

    xih::SummationScheme scheme(int default_n_max = 400) const {
        xih::SummationScheme s;
        s.method = parse_method(method);
        s.N_max = default_n_max;
        if (m_max) s.M_max = *m_max;
        if (n_max) s.N_max = *n_max;
        s.validate();
        return s;
    }
};

int exit_code_for(const std::vector<xih::VerificationReport>& reports) {
    for (const xih::VerificationReport& r : reports)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Numerical verification of xi-based harmonic identities"};
    app.require_subcommand(1);

    // verify -------------------------------------------------------------
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);

    CLI::App* eq11 = verify->add_subcommand("eq11", "cosine transform vs theta factor");
    std::string eq11_x;
    CommonOpts eq11_common;
    eq11->add_option("--x", eq11_x, "comma list of evaluation points");
    eq11_common.attach(eq11);

    CLI::App* upsilon = verify->add_subcommand("upsilon", "contour integral vs series");
    std::vector<std::string> upsilon_s;
    CommonOpts upsilon_common;
    upsilon->add_option("--s", upsilon_s, "s value re[,im] (repeatable)");
    upsilon_common.attach(upsilon);

    CLI::App* dirichlet = verify->add_subcommand("dirichlet", "extension vs transform route");
    std::optional<int> dirichlet_n;
    std::string dirichlet_y;
    CommonOpts dirichlet_common;
    dirichlet->add_option("--n", dirichlet_n, "restrict to one dimension (1..3)");
    dirichlet->add_option("--y", dirichlet_y, "comma list of heights");
    dirichlet_common.attach(dirichlet);

    CLI::App* chain = verify->add_subcommand("laplace-chain", "diagonal transform resolvent routes");
    std::optional<int> chain_n;
    std::vector<std::string> chain_s;
    CommonOpts chain_common;
    chain->add_option("--n", chain_n, "dimension (1..3)");
    chain->add_option("--s", chain_s, "s value re[,im] (repeatable)");
    chain_common.attach(chain);

    CLI::App* rk = verify->add_subcommand("rk", "square-count convolution identity");
    std::optional<int> rk_n;
    CommonOpts rk_common;
    rk->add_option("--n", rk_n, "largest index checked (default 500)");
    rk_common.attach(rk);

    CLI::App* duffin = verify->add_subcommand("duffin", "regularized series vs Poisson integral");
    std::string duffin_x, duffin_y, duffin_conv = "auto";
    SchemeOpts duffin_scheme;
    CommonOpts duffin_common;
    duffin->add_option("--x", duffin_x, "comma list of x values");
    duffin->add_option("--y", duffin_y, "comma list of heights");
    duffin->add_option("--convention", duffin_conv, "plain|twopi|auto")
        ->check(CLI::IsMember({"plain", "twopi", "auto"}));
    duffin_scheme.attach(duffin);
    duffin_common.attach(duffin);

    // zeros ----------------------------------------------------------------
    CLI::App* zeros = app.add_subcommand("zeros", "locate zeros of Xi up to a height");
    double zeros_height = 30.0;
    CommonOpts zeros_common;
    zeros->add_option("--max-height", zeros_height, "scan ceiling (<= 60)");
    zeros_common.attach(zeros, /*with_tols=*/false);

    // rh-scan ----------------------------------------------------------------
    CLI::App* scan = app.add_subcommand("rh-scan", "continuation trajectory at zero ordinates");
    std::string scan_gamma, scan_y, scan_zeros_file;
    SchemeOpts scan_scheme;
    CommonOpts scan_common;
    scan->add_option("--gamma", scan_gamma, "comma list of ordinates");
    scan->add_option("--y", scan_y, "comma list of heights (decreasing)");
    scan->add_option("--zeros-file", scan_zeros_file, "CSV of zeros to supply the ordinates");
    scan_scheme.attach(scan);
    scan_common.attach(scan, /*with_tols=*/false);

    // boundary ----------------------------------------------------------------
    CLI::App* boundary = app.add_subcommand("boundary", "recovery of the boundary data as y -> 0");
    std::string boundary_x = "1", boundary_y;
    SchemeOpts boundary_scheme;
    CommonOpts boundary_common;
    boundary->add_option("--x", boundary_x, "boundary point");
    boundary->add_option("--y", boundary_y, "comma list of heights (decreasing)");
    boundary_scheme.attach(boundary);
    boundary_common.attach(boundary, /*with_tols=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const std::vector<double> default_scan_y = {0.5, 0.1, 0.02, 0.004, 0.001, 0.0001};

    if (eq11->parsed()) {
        std::vector<double> xs =
            eq11_x.empty() ? std::vector<double>{0.0, 0.25, 0.5, 1.0, 2.0, 4.0}
                           : parse_list(eq11_x, "--x");
        auto reports = xih::verify_eq11(xs, eq11_common.gates(xih::eq11_gates()));
        eq11_common.emit(reports);
        return exit_code_for(reports);
    }
    if (upsilon->parsed()) {
        std::vector<xih::complex> ss =
            upsilon_s.empty()
                ? std::vector<xih::complex>{{1.5, 0.0}, {2.0, 0.0}, {2.5, 0.0}, {3.0, 0.0}, {2.0, 1.0}}
                : parse_s_values(upsilon_s);
        auto reports = xih::verify_upsilon(ss, upsilon_common.gates(xih::upsilon_gates()));
        upsilon_common.emit(reports);
        return exit_code_for(reports);
    }
    if (dirichlet->parsed()) {
        std::vector<int> ns = dirichlet_n ? std::vector<int>{*dirichlet_n}
                                          : std::vector<int>{1, 2};
        std::vector<double> ys = dirichlet_y.empty() ? std::vector<double>{1.0, 2.0}
                                                     : parse_list(dirichlet_y, "--y");
        auto reports =
            xih::verify_dirichlet(ns, ys, dirichlet_common.gates(xih::dirichlet_gates()));
        dirichlet_common.emit(reports);
        return exit_code_for(reports);
    }
    if (chain->parsed()) {
        std::vector<std::pair<int, xih::complex>> runs;
        std::vector<xih::complex> ss = parse_s_values(chain_s);
        if (chain_n) {
            xih::complex s_default(*chain_n == 1 ? 2.0 : (*chain_n == 2 ? 3.0 : 4.0), 0.0);
            if (ss.empty()) {
                runs.emplace_back(*chain_n, s_default);
            } else {
                for (xih::complex s : ss) runs.emplace_back(*chain_n, s);
            }
        } else {
            if (!ss.empty())
                throw xih::DomainError("laplace-chain: --s requires --n");
            runs = {{1, {2.0, 0.0}}, {2, {3.0, 0.0}}};
        }
        std::vector<xih::VerificationReport> reports;
        for (auto& [n, s] : runs)
            reports.push_back(
                xih::verify_laplace_chain(n, s, chain_common.gates(xih::chain_gates(n))));
        chain_common.emit(reports);
        return exit_code_for(reports);
    }
    if (rk->parsed()) {
        auto reports = xih::verify_rk(6, rk_n.value_or(500));
        rk_common.emit(reports);
        return exit_code_for(reports);
    }
    if (duffin->parsed()) {
        std::vector<double> xs = duffin_x.empty() ? std::vector<double>{1.0, 2.0}
                                                  : parse_list(duffin_x, "--x");
        std::vector<double> ys = duffin_y.empty() ? std::vector<double>{1.0, 2.0, 4.0}
                                                  : parse_list(duffin_y, "--y");
        xih::SummationScheme scheme = duffin_scheme.scheme();
        xih::Convention conv = parse_convention(duffin_conv);
        auto reports =
            xih::verify_duffin(xs, ys, scheme, conv, duffin_common.gates(xih::duffin_gates()));
        reports.push_back(xih::duffin_small_x_probe(1.0, scheme));
        duffin_common.emit(reports);
        return exit_code_for(reports);
    }
    if (zeros->parsed()) {
        xih::ZerosTable table = xih::find_zeros(zeros_height);
        xih::OutputFormat f = parse_format(zeros_common.format);
        if (zeros_common.out_path.empty()) {
            xih::emit_zeros(table, f, std::cout);
        } else {
            xih::emit_zeros_to_file(table, f, zeros_common.out_path);
        }
        return 0;
    }
    if (scan->parsed()) {
        std::vector<double> gammas;
        if (!scan_gamma.empty()) {
            gammas = parse_list(scan_gamma, "--gamma");
        } else if (!scan_zeros_file.empty()) {
            xih::ZerosTable t = xih::load_zeros_file(scan_zeros_file);
            for (std::size_t i = 0; i < t.entries.size() && i < 2; ++i)
                gammas.push_back(t.entries[i].gamma);
            gammas.push_back(10.0);  // off-zero control ordinate
        } else {
            xih::ZerosTable t = xih::find_zeros(26.0);
            for (std::size_t i = 0; i < t.entries.size() && i < 2; ++i)
                gammas.push_back(t.entries[i].gamma);
            gammas.push_back(10.0);
        }
        std::vector<double> ys =
            scan_y.empty() ? default_scan_y : parse_list(scan_y, "--y");
        xih::SummationScheme scheme = scan_scheme.scheme(/*default_n_max=*/2000);
        std::vector<xih::ScanRow> rows;
        for (double g : gammas) {
            auto traj = xih::rh_criterion_scan(g, ys, scheme);
            for (auto& [y, v] : traj) rows.push_back({g, y, v});
        }
        xih::OutputFormat f = parse_format(scan_common.format);
        if (scan_common.out_path.empty()) {
            xih::emit_scan(rows, f, std::cout);
        } else {
            xih::emit_scan_to_file(rows, f, scan_common.out_path);
        }
        return 0;
    }
    if (boundary->parsed()) {
        double x = parse_list(boundary_x, "--x")[0];
        std::vector<double> ys =
            boundary_y.empty() ? default_scan_y : parse_list(boundary_y, "--y");
        xih::SummationScheme scheme = boundary_scheme.scheme(/*default_n_max=*/2000);
        auto reports = xih::boundary_recovery(x, ys, scheme);
        boundary_common.emit(reports);
        return exit_code_for(reports);
    }
    return 2;  // unreachable: a subcommand is required
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const xih::DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const xih::PoleError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const xih::Error& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
