// specres command-line front end.
//
// Every option lives on the root command so a flat "key = value" config file (--config) can set
// any of them; subcommands fall through to it. Flags given on the command line win over the file.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specres/diagonal.hpp"
#include "specres/error.hpp"
#include "specres/harness.hpp"
#include "specres/report.hpp"
#include "specres/resolutions.hpp"
#include "specres/specfun.hpp"

using namespace specres;

namespace {

enum Exit { kPass = 0, kToleranceFailure = 1, kUsage = 2, kRejected = 3 };

struct Options {
    std::string case_name;
    std::string symbol_name;
    std::string kernel_name;
    std::optional<double> m, a, b, mass;
    std::optional<int> ell;
    std::optional<std::size_t> n, spectral_n, corpus_size;
    std::optional<double> L, U, tolerance;
    std::vector<double> range;
    std::size_t samples = 401;
    std::vector<std::size_t> n_list{1024, 2048, 4096, 8192};
    std::string out;
    std::string format = "json";
    bool all = false;
    bool timings = false;
    bool no_probes = false;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
    } else {
        write_file_atomic(o.out, text);
    }
}

CaseParams params_from(const Options& o) {
    CaseParams p;
    if (o.m) p.m = *o.m;
    if (o.ell) p.ell = *o.ell;
    if (o.a) p.a = *o.a;
    if (o.b) p.b = *o.b;
    if (o.mass) p.mass = *o.mass;
    return p;
}

GridConfig grid_from(const Options& o) {
    GridConfig g;
    g.n = o.n;
    g.L = o.L;
    g.U = o.U;
    g.spectral_n = o.spectral_n;
    if (g.n && !is_power_of_two(*g.n)) throw InvalidArgument("--n must be a power of two");
    if (g.spectral_n && !is_power_of_two(*g.spectral_n)) throw InvalidArgument("--spectral-n must be a power of two");
    return g;
}

std::pair<double, double> range_from(const Options& o, double lo, double hi) {
    if (o.range.empty()) return {lo, hi};
    if (o.range.size() != 2 || !(o.range[0] < o.range[1])) throw InvalidArgument("--range expects LO HI with LO < HI");
    return {o.range[0], o.range[1]};
}

std::vector<double> nodes(const Options& o, std::pair<double, double> r) {
    if (o.samples < 2) throw InvalidArgument("--samples must be at least 2");
    std::vector<double> t(o.samples);
    for (std::size_t k = 0; k < o.samples; ++k) {
        t[k] = r.first + (r.second - r.first) * static_cast<double>(k) / static_cast<double>(o.samples - 1);
    }
    return t;
}

int cmd_list() {
    std::cout << "cases:\n";
    const char* what[] = {
        "Hilbert transform vs off-diagonal multiplier of A after the even/odd split (P.v. and sign-multiplier paths)",
        "Hankel transform: involution, J H_m = Xi_m(A), H_m J = Xi_m(-A)   [--m]",
        "3D radial kernel T_ell = phi_ell(A) on spectral bumps              [--ell]",
        "finite Hilbert transform on (a,b) = -i tanh(pi D/2) after rescaling [--a --b]",
        "weighted finite Hilbert transform on (-2,2)",
        "Dirac kernel on the gapped set Sigma, per component                [--mass]",
    };
    std::size_t k = 0;
    for (const auto c : all_cases()) {
        char line[256];
        std::snprintf(line, sizeof line, "  %-26s %s\n", case_id(c), what[k++]);
        std::cout << line;
    }
    std::cout << "probes (report --all):\n"
                 "  xi_asymptotics             Xi_m(-t) Xi_m'(t) against its limit, (m,m') = (0,1), (1/2,5/2)\n"
                 "  compact_remainder          exact minus simplified weighted resolution on translated bumps\n"
                 "  unitary_maps               isometry, inverse and transport of the four interval maps\n"
                 "symbols: xi, phi, tanh_pi_half, dirac_diag\n"
                 "kernels: stieltjes, hardy, j_hankel\n";
    return kPass;
}

int cmd_verify(const Options& o) {
    const CaseName name = parse_case(o.case_name);
    auto c = build_case(name, params_from(o), grid_from(o));
    if (o.tolerance) c.tolerance = *o.tolerance;
    const auto r = evaluate_case(c, o.corpus_size.value_or(0));
    if (o.format == "csv") {
        emit(o, to_csv(r));
    } else {
        emit(o, to_json(r, o.timings));
    }
    std::cerr << r.case_id << ": max_error " << format_number(r.max_error) << " (tolerance "
              << format_number(r.tolerance) << ") " << (r.pass ? "PASS" : "FAIL") << "\n";
    return r.pass ? kPass : kToleranceFailure;
}

int cmd_symbol(const Options& o) {
    const auto t = nodes(o, range_from(o, -10.0, 10.0));
    std::ostringstream s;
    const std::string& name = o.symbol_name;
    if (name == "dirac_diag") {
        s << "t,re,im,re2,im2\n";
        for (const double x : t) {
            const cplx u = cplx(0, 1) * cplx(tanh_pi(2 * x), sech_pi(2 * x));
            const cplx v = cplx(0, 1) * cplx(tanh_pi(2 * x), -sech_pi(2 * x));
            s << format_number(x) << ',' << format_number(u.real()) << ',' << format_number(u.imag()) << ','
              << format_number(v.real()) << ',' << format_number(v.imag()) << '\n';
        }
        emit(o, s.str());
        return kPass;
    }
    std::function<cplx(double)> f;
    if (name == "xi") {
        const double m = o.m.value_or(0.5);
        if (!(m > -1.0)) throw InvalidArgument("xi requires m > -1");
        f = [m](double x) { return xi_symbol(m, x); };
    } else if (name == "phi") {
        const int ell = o.ell.value_or(0);
        if (ell < 0) throw InvalidArgument("phi requires ell >= 0");
        f = [ell](double x) { return phi_ell(ell, x); };
    } else if (name == "tanh_pi_half") {
        f = [](double x) { return cplx(tanh_pi(0.5 * x)); };
    } else {
        throw InvalidArgument("unknown symbol '" + name + "' (xi, phi, tanh_pi_half, dirac_diag)");
    }
    s << "t,re,im\n";
    for (const double x : t) {
        const cplx v = f(x);
        s << format_number(x) << ',' << format_number(v.real()) << ',' << format_number(v.imag()) << '\n';
    }
    emit(o, s.str());
    return kPass;
}

int cmd_mellin_symbol(const Options& o) {
    const double m = o.m.value_or(0.0);
    const auto kernel = builtin_kernel(o.kernel_name, m);
    const auto reference = builtin_kernel_symbol(o.kernel_name, m);
    const auto r = range_from(o, -5.0, 5.0);
    SymbolTableOptions opt;
    opt.t_min = std::min(opt.t_min, r.first);
    opt.t_max = std::max(opt.t_max, r.second);
    const auto sym = symbol_from_homogeneous_kernel(kernel, opt);
    std::ostringstream s;
    s << "t,re,im,ref_re,ref_im,abs_diff\n";
    double worst = 0.0;
    for (const double x : nodes(o, r)) {
        const cplx v = sym(x), w = reference(x);
        worst = std::max(worst, std::abs(v - w));
        s << format_number(x) << ',' << format_number(v.real()) << ',' << format_number(v.imag()) << ','
          << format_number(w.real()) << ',' << format_number(w.imag()) << ',' << format_number(std::abs(v - w)) << '\n';
    }
    emit(o, s.str());
    std::cerr << kernel.name << ": max |symbol - closed form| = " << format_number(worst) << "\n";
    return kPass;
}

int cmd_convergence(const Options& o) {
    const CaseName name = parse_case(o.case_name);
    for (const auto n : o.n_list) {
        if (!is_power_of_two(n)) throw InvalidArgument("--n-list entries must be powers of two");
    }
    const auto table = convergence_study(name, params_from(o), o.n_list, grid_from(o));
    emit(o, to_csv(table));
    if (!table.monotone) std::cerr << "warning: errors are not monotone in n\n";
    return kPass;
}

int cmd_report(const Options& o) {
    RunConfig cfg;
    if (!o.all) {
        if (o.case_name.empty()) throw InvalidArgument("report needs --all or a case name");
        cfg.cases = {parse_case(o.case_name)};
        if (o.m || o.ell || o.a || o.b || o.mass) cfg.params = params_from(o);
    }
    cfg.grid = grid_from(o);
    cfg.tolerance = o.tolerance;
    cfg.probes = !o.no_probes;
    const auto r = run_all(cfg);
    emit(o, to_json(r, o.timings));
    for (const auto& c : r.cases) {
        std::cerr << c.case_id << " " << format_number(c.max_error) << (c.pass ? " PASS" : " FAIL") << "\n";
    }
    for (const auto& p : r.probes) std::cerr << p.name << (p.pass ? " PASS" : " FAIL") << "\n";
    for (const auto& f : r.failures) std::cerr << "error: " << f << "\n";
    return r.pass ? kPass : kToleranceFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kernel quadrature vs spectral resolutions of singular integral operators"};
    app.set_config("--config", "", "flat key = value file; keys are long flag names");
    app.require_subcommand(1);
    Options o;

    app.add_option("--m", o.m, "Hankel / Bessel order");
    app.add_option("--ell", o.ell, "angular momentum");
    app.add_option("--a", o.a, "left end of the finite interval");
    app.add_option("--b", o.b, "right end of the finite interval");
    app.add_option("--mass", o.mass, "Dirac mass");
    app.add_option("--n", o.n, "native grid size (power of two)");
    app.add_option("--L", o.L, "half width of the line grid");
    app.add_option("--U", o.U, "half width of the log grid in ln x");
    app.add_option("--spectral-n", o.spectral_n, "size of the grid the multiplier acts on");
    app.add_option("--tolerance", o.tolerance, "override the case tolerance");
    app.add_option("--corpus-size", o.corpus_size, "use only the first N corpus members");
    app.add_option("--range", o.range, "LO HI")->expected(2);
    app.add_option("--samples", o.samples, "number of t samples");
    app.add_option("--n-list", o.n_list, "grid sizes for the convergence study")->delimiter(',');
    app.add_option("-o,--out", o.out, "output file (written atomically); stdout if omitted");
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--all", o.all, "run every case with its standard parameters");
    app.add_flag("--timings", o.timings, "include wall times in JSON (breaks byte reproducibility)");
    app.add_flag("--no-probes", o.no_probes, "skip the probes in report");

    auto* list = app.add_subcommand("list", "list cases, probes, symbols and kernels");
    auto* verify = app.add_subcommand("verify", "check one case's identities");
    verify->add_option("case", o.case_name, "case name")->required();
    auto* symbol = app.add_subcommand("symbol", "tabulate a symbol as CSV (t, re, im)");
    symbol->add_option("name", o.symbol_name, "xi | phi | tanh_pi_half | dirac_diag")->required();
    auto* mellin = app.add_subcommand("mellin-symbol", "extract a symbol from a homogeneous kernel");
    mellin->add_option("kernel", o.kernel_name, "stieltjes | hardy | j_hankel")->required();
    auto* conv = app.add_subcommand("convergence", "error against native grid size, as CSV");
    conv->add_option("case", o.case_name, "case name")->required();
    auto* report = app.add_subcommand("report", "aggregate JSON report");
    report->add_option("case", o.case_name, "case name (instead of --all)");
    for (auto* sub : {list, verify, symbol, mellin, conv, report}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*list) return cmd_list();
        if (*verify) return cmd_verify(o);
        if (*symbol) return cmd_symbol(o);
        if (*mellin) return cmd_mellin_symbol(o);
        if (*conv) return cmd_convergence(o);
        if (*report) return cmd_report(o);
    } catch (const NumericalRejection& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kRejected;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const GridMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kRejected;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
