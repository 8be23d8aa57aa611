// Acceptance suite: one PASS/FAIL line per criterion. Criteria listed with --known-unattainable
// are still evaluated and printed; they only stop counting towards the exit status.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "specres/diagonal.hpp"
#include "specres/error.hpp"
#include "specres/harness.hpp"
#include "specres/kernels.hpp"
#include "specres/specfun.hpp"

using namespace specres;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [x]");
    }
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double check_error(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks) {
        if (c.name == name) return c.max_error;
    }
    throw Error("report of " + r.case_id + " has no check " + name);
}

VerificationReport run_case(CaseName name, const CaseParams& p = {}) { return evaluate_case(build_case(name, p)); }

void criterion_1(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = run_case(CaseName::HilbertEvenOdd);
    const double secs = seconds_since(t0);
    o.require(r.corpus.size() == 8, "corpus size " + std::to_string(r.corpus.size()));
    o.require(check_error(r, "identity_pv") <= 1e-5, "P.v. path " + sci(check_error(r, "identity_pv")));
    o.require(check_error(r, "identity_multiplier") <= 1e-5, "multiplier path " + sci(check_error(r, "identity_multiplier")));
    o.require(check_error(r, "pv_vs_multiplier") <= 1e-5, "paths agree " + sci(check_error(r, "pv_vs_multiplier")));
    o.require(secs <= 10.0, "runtime " + sci(secs) + " s");
}

void criterion_2(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    for (double m : {0.0, 0.5, 1.0, 2.5}) {
        CaseParams p;
        p.m = m;
        const auto r = run_case(CaseName::HankelJXi, p);
        const double inv = check_error(r, "involution"), jh = check_error(r, "J_hankel"), hj = check_error(r, "hankel_J");
        o.require(inv <= 1e-4 && jh <= 1e-4 && hj <= 1e-4,
                  "m=" + sci(m) + ": HH=" + sci(inv) + " JH=" + sci(jh) + " HJ=" + sci(hj));
    }
    const double secs = seconds_since(t0);
    o.require(secs <= 60.0, "runtime " + sci(secs) + " s");
}

// Off-node points of the default symbol table on [-5, 5].
std::vector<double> off_node_t() {
    std::vector<double> t;
    for (int k = 0; k < 2001; ++k) t.push_back(-5.0 + 10.0 * (k + 0.37) / 2001.0);
    return t;
}

void criterion_3(Outcome& o) {
    auto worst = [](const Symbol& a, const Symbol& b) {
        double e = 0.0;
        for (double t : off_node_t()) e = std::max(e, std::abs(a(t) - b(t)));
        return e;
    };
    const double st = worst(symbol_from_homogeneous_kernel(builtin_kernel("stieltjes")), builtin_kernel_symbol("stieltjes"));
    o.require(st <= 1e-8, "stieltjes " + sci(st));
    const double hardy = worst(symbol_from_homogeneous_kernel(builtin_kernel("hardy")), builtin_kernel_symbol("hardy"));
    o.require(hardy <= 1e-8, "hardy " + sci(hardy));
    for (double m : {0.0, 1.0}) {
        const double e = worst(symbol_from_homogeneous_kernel(builtin_kernel("j_hankel", m)), builtin_kernel_symbol("j_hankel", m));
        o.require(e <= 1e-5, "j_hankel m=" + sci(m) + " " + sci(e));
    }
}

void criterion_4(Outcome& o) {
    for (int ell : {0, 1, 2}) {
        CaseParams p;
        p.ell = ell;
        const auto r = run_case(CaseName::T3D, p);
        o.require(r.max_error <= 1e-4, "ell=" + std::to_string(ell) + " " + sci(r.max_error));
        const double lo = std::abs(phi_ell(ell, -40.0)), hi = std::abs(phi_ell(ell, 40.0) - 1.0);
        o.require(lo <= 1e-6 && hi <= 1e-6, "ell=" + std::to_string(ell) + " |phi(-40)|=" + sci(lo) + " |phi(40)-1|=" + sci(hi));
    }
    double e = 0.0;
    for (int k = -8000; k <= 8000; ++k) e = std::max(e, std::abs(phi_ell(0, 0.005 * k) - phi_zero_closed_form(0.005 * k)));
    o.require(e <= 1e-12, "phi_0 closed form " + sci(e));
}

void criterion_5(Outcome& o) {
    for (auto [m, mp] : {std::pair{0.0, 1.0}, {0.5, 2.5}}) {
        const auto p = xi_asymptotics_probe(m, mp);
        const double d100 = p.rows.back()[3];
        o.require(d100 < 0.02, "(" + sci(m) + "," + sci(mp) + ") at t=100: " + sci(d100));
        o.require(p.pass, "(" + sci(m) + "," + sci(mp) + ") decreasing");
    }
}

void criterion_6(Outcome& o) {
    for (auto [a, b] : {std::pair{0.0, 1.0}, {-3.0, 7.0}}) {
        CaseParams p;
        p.a = a;
        p.b = b;
        const auto r = run_case(CaseName::FiniteHilbert, p);
        o.require(r.max_error <= 1e-5, "(" + sci(a) + "," + sci(b) + ") " + sci(r.max_error));

        const auto s = make_space(UniformGrid::cell_centered(a, b, 8192));
        const auto h = finite_hilbert(a, b, sample(s, [](double) { return cplx(1.0); }));
        double e = 0.0;
        for (std::size_t j = 0; j < s->size(); ++j) {
            const double l = s->points()[j];
            if (l - a < 0.05 * (b - a) || b - l < 0.05 * (b - a)) continue;
            e = std::max(e, std::abs(h[j] - std::log((l - a) / (b - l)) / std::numbers::pi));
        }
        o.require(e <= 1e-6, "constant (" + sci(a) + "," + sci(b) + ") " + sci(e));
    }
    const auto t = convergence_study(CaseName::FiniteHilbert, CaseParams{}, {512, 1024, 2048, 4096});
    o.require(t.overall_order >= 2.0, "order " + sci(t.overall_order));
}

void criterion_7(Outcome& o) {
    const auto r = run_case(CaseName::WeightedFiniteHilbert);
    o.require(r.max_error <= 1e-4, "identity " + sci(r.max_error));
    const auto p = compact_remainder_probe();
    const double ratio = p.rows.back()[1] / p.rows.front()[1];
    bool decreasing = true;
    for (std::size_t k = 1; k < p.rows.size(); ++k) {
        if (p.rows[k][0] >= 2.0 && p.rows[k - 1][0] >= 2.0 && !(p.rows[k][1] < p.rows[k - 1][1])) decreasing = false;
    }
    o.require(p.rows.back()[0] == 12.0 && ratio < 0.1, "r(12)/r(0) " + sci(ratio));
    o.require(decreasing, "strictly decreasing for s >= 2");
}

void criterion_8(Outcome& o) {
    std::vector<double> errs;
    for (double mass : {1.0, 2.0}) {
        CaseParams p;
        p.mass = mass;
        const auto r = run_case(CaseName::DiracUpsideDown, p);
        const double c1 = check_error(r, "component_1"), c2 = check_error(r, "component_2");
        o.require(c1 <= 1e-4 && c2 <= 1e-4, "mass " + sci(mass) + ": " + sci(c1) + ", " + sci(c2));
        errs.push_back(r.max_error);
    }
    const double spread = std::abs(errs[0] - errs[1]) / std::max(errs[0], errs[1]);
    o.require(spread < 0.05, "rescaled errors differ by " + sci(100.0 * spread) + "%");
}

void criterion_9(Outcome& o) {
    const auto p = unitary_map_probe();
    const char* names[] = {"EVEN_ODD", "AB_INTERVAL", "PM2", "SIGMA"};
    for (const auto& row : p.rows) {
        const bool ok = row[1] <= 1e-8 && row[2] <= 1e-6 && row[3] <= 1e-10;
        o.require(ok, std::string(names[static_cast<int>(row[0])]) + " " + sci(row[1]) + "/" + sci(row[2]) + "/" + sci(row[3]));
    }
    o.require(p.rows.size() == 4, "four maps");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

void criterion_10(Outcome& o, const std::string& cli) {
    std::vector<std::string> outputs;
    double slowest = 0.0;
    const auto dir = std::filesystem::temp_directory_path();
    for (int k = 0; k < 2; ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        if (cli.empty()) {
            outputs.push_back(to_json(run_all(RunConfig{})));
        } else {
            const auto path = (dir / ("specres_acceptance_" + std::to_string(k) + ".json")).string();
            const std::string cmd = "\"" + cli + "\" report --all -o \"" + path + "\" > /dev/null 2>&1";
            const int rc = std::system(cmd.c_str());
            o.require(rc == 0, "report --all run " + std::to_string(k + 1) + " exit " + std::to_string(rc));
            outputs.push_back(slurp(path));
            std::filesystem::remove(path);
        }
        slowest = std::max(slowest, seconds_since(t0));
    }
    o.require(!outputs[0].empty() && outputs[0] == outputs[1], "byte-identical reports (" + std::to_string(outputs[0].size()) + " bytes)");
    o.require(slowest <= 300.0, "full suite " + sci(slowest) + " s");
}

std::set<int> parse_list(const std::string& text) {
    std::set<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.insert(std::stoi(item));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> unattainable, only;
    std::string cli;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--known-unattainable" && i + 1 < argc) {
            unattainable = parse_list(argv[++i]);
        } else if (arg == "--only" && i + 1 < argc) {
            only = parse_list(argv[++i]);
        } else if (arg == "--cli" && i + 1 < argc) {
            cli = argv[++i];
        } else {
            std::cerr << "usage: specres_acceptance [--only 1,2,...] [--known-unattainable 5] [--cli path/to/specres]\n";
            return 2;
        }
    }

    const std::vector<std::function<void(Outcome&)>> criteria = {
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9,
        [&cli](Outcome& o) { criterion_10(o, cli); },
    };

    int unexpected = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const int id = static_cast<int>(k + 1);
        if (!only.empty() && !only.count(id)) continue;
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[k](o);
        } catch (const std::exception& e) {
            o.require(false, std::string("raised: ") + e.what());
        }
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  (" << sci(seconds_since(t0)) << " s) "
                  << o.detail.str();
        if (!o.pass && unattainable.count(id)) std::cout << "  [known unattainable]";
        std::cout << std::endl;
        if (!o.pass && !unattainable.count(id)) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
