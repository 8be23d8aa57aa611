#include "specres/harness.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <type_traits>
#include <variant>

#include "specres/error.hpp"
#include "specres/kernels.hpp"
#include "specres/specfun.hpp"

namespace specres {

const char* family_name(CorpusFamily family) {
    switch (family) {
        case CorpusFamily::GaussHermite: return "GAUSS_HERMITE";
        case CorpusFamily::Bump: return "BUMP";
        case CorpusFamily::LogGauss: return "LOG_GAUSS";
        case CorpusFamily::SpectralBump: return "SPECTRAL_BUMP";
        case CorpusFamily::TwoBranchBump: return "TWO_BRANCH_BUMP";
    }
    return "?";
}

double bump(double u) {
    if (!(std::abs(u) < 1.0)) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
}

namespace {

std::string describe(const CorpusSpec& spec, const CorpusMember& m) {
    std::ostringstream s;
    s << family_name(spec.family) << "(";
    switch (spec.family) {
        case CorpusFamily::GaussHermite: s << "degree=" << m.degree << ",width=" << m.width; break;
        case CorpusFamily::TwoBranchBump:
            s << "center=" << m.center << ",width=" << m.width << ",center2=" << m.center2 << ",width2=" << m.width2;
            break;
        default: s << "center=" << m.center << ",width=" << m.width; break;
    }
    s << ")";
    return s.str();
}

// Edge values of the function in flat coordinates: |v| sqrt(w / spacing), i.e. the raw sample on
// uniform grids and x^{d/2} |v| on log grids. Split grids are checked at all four branch ends.
void check_edges(const TestFunction& t) {
    const auto& disc = t.samples.disc();
    const auto w = disc.weights();
    const std::size_t n = t.samples.size();
    double spacing = 1.0;
    std::vector<std::size_t> ends{0, n - 1};
    std::visit(
        [&](const auto& g) {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, UniformGrid>) spacing = g.dx;
            if constexpr (std::is_same_v<G, LogGrid>) spacing = g.u.dx;
            if constexpr (std::is_same_v<G, SigmaGrid>) {
                spacing = g.spacing();
                ends.push_back(g.branch_size() - 1);
                ends.push_back(g.branch_size());
            }
        },
        disc.grid());
    for (std::size_t c = 0; c < t.samples.components(); ++c) {
        const auto v = t.samples.component(c);
        for (const std::size_t j : ends) {
            if (std::abs(v[j]) * std::sqrt(w[j] / spacing) > 1e-12) {
                throw NumericalRejection("corpus member " + t.label + " does not vanish at the domain edge");
            }
        }
    }
}

}  // namespace

std::vector<TestFunction> make_corpus(const CorpusSpec& spec) {
    if (!spec.space) throw InvalidArgument("corpus spec has no space");
    std::vector<TestFunction> out;
    for (const auto& m : spec.members) {
        if (!(m.width > 0.0)) throw InvalidArgument("corpus member width must be positive");
        TestFunction t{describe(spec, m), {}, GridFunction(spec.space)};
        switch (spec.family) {
            case CorpusFamily::GaussHermite: {
                const int d = m.degree;
                const double c = m.center, w = m.width;
                if (d < 0 || d > 5) throw InvalidArgument("Gauss-Hermite degree must lie in 0..5");
                t.rules = {[d, c, w](double x) {
                    const double y = x - c;
                    return cplx(std::pow(y, d) * std::exp(-0.5 * y * y / (w * w)));
                }};
                break;
            }
            case CorpusFamily::Bump:
            case CorpusFamily::SpectralBump: {
                const double c = m.center, w = m.width;
                t.rules = {[c, w](double x) { return cplx(bump((x - c) / w)); }};
                t.support = {c - w, c + w};
                break;
            }
            case CorpusFamily::LogGauss: {
                const double c = m.center, w = m.width;
                t.rules = {[c, w](double x) {
                    if (!(x > 0.0)) return cplx{};
                    const double u = std::log(x) - c;
                    return cplx(std::exp(-0.5 * u * u / (w * w)) / std::sqrt(x));
                }};
                break;
            }
            case CorpusFamily::TwoBranchBump: {
                const double s = spec.mass;
                const double c1 = m.center * s, w1 = m.width * s, c2 = -m.center2 * s, w2 = m.width2 * s;
                if (!(m.width2 > 0.0)) throw InvalidArgument("two-branch member needs a second width");
                auto pos = [c1, w1](double x) { return bump((x - c1) / w1); };
                auto neg = [c2, w2](double x) { return bump((x - c2) / w2); };
                t.rules = {[pos, neg](double x) { return cplx(pos(x) + 0.5 * neg(x)); },
                           [pos, neg](double x) { return cplx(-0.3 * pos(x), 0.7 * neg(x)); }};
                break;
            }
        }
        if (spec.family == CorpusFamily::SpectralBump) {
            if (spec.space->measure() != Measure::Radial3D) throw GridMismatch("spectral bumps live in L^2(R_+, r^2 dr)");
            t.samples = fourier_sph_profile(spec.ell, t.rules[0], t.support.first, t.support.second, spec.space);
        } else if (t.rules.size() == 2) {
            t.samples = sample(spec.space, t.rules[0], t.rules[1]);
        } else {
            t.samples = sample(spec.space, t.rules[0]);
        }
        check_edges(t);
        out.push_back(std::move(t));
    }
    return out;
}

ConvergenceTable convergence_study(CaseName name, const CaseParams& params, const std::vector<std::size_t>& n_list,
                                   const GridConfig& base) {
    if (n_list.empty()) throw InvalidArgument("convergence study needs at least one grid size");
    for (std::size_t k = 1; k < n_list.size(); ++k) {
        if (n_list[k] <= n_list[k - 1]) throw InvalidArgument("grid sizes must be ascending");
    }
    ConvergenceTable table;
    table.case_id = case_id(name);
    for (const std::size_t n : n_list) {
        GridConfig g = base;
        g.n = n;
        const auto report = evaluate_case(build_case(name, params, g));
        ConvergenceRow row{n, report.max_error, 0.0};
        if (!table.rows.empty()) {
            const auto& prev = table.rows.back();
            row.order = std::log2(prev.max_error / row.max_error) / std::log2(static_cast<double>(n) / static_cast<double>(prev.n));
            if (row.max_error > prev.max_error) table.monotone = false;
        }
        table.rows.push_back(row);
    }
    if (table.rows.size() > 1) {
        const auto& first = table.rows.front();
        const auto& last = table.rows.back();
        table.overall_order = std::log2(first.max_error / last.max_error) /
                              std::log2(static_cast<double>(last.n) / static_cast<double>(first.n));
    }
    return table;
}

std::string to_csv(const ConvergenceTable& table) {
    std::string out = "case,n,max_error,order\n";
    for (const auto& r : table.rows) {
        out += table.case_id + "," + std::to_string(r.n) + "," + format_number(r.max_error) + "," + format_number(r.order) + "\n";
    }
    return out;
}

std::vector<CaseParams> standard_params(CaseName name) {
    switch (name) {
        case CaseName::HankelJXi: {
            std::vector<CaseParams> out;
            for (double m : {0.0, 0.5, 1.0, 2.5}) {
                CaseParams p;
                p.m = m;
                out.push_back(p);
            }
            return out;
        }
        case CaseName::T3D: {
            std::vector<CaseParams> out;
            for (int ell : {0, 1, 2}) {
                CaseParams p;
                p.ell = ell;
                out.push_back(p);
            }
            return out;
        }
        case CaseName::FiniteHilbert: {
            CaseParams p, q;
            q.a = -3.0;
            q.b = 7.0;
            return {p, q};
        }
        case CaseName::DiracUpsideDown: {
            CaseParams p, q;
            q.mass = 2.0;
            return {p, q};
        }
        default: return {CaseParams{}};
    }
}

AggregateReport run_all(const RunConfig& config) {
    AggregateReport agg;
    const std::vector<CaseName> cases = config.cases.empty() ? all_cases() : config.cases;
    for (const CaseName name : cases) {
        const auto param_list = config.params ? std::vector<CaseParams>{*config.params} : standard_params(name);
        for (const auto& p : param_list) {
            try {
                auto c = build_case(name, p, config.grid);
                if (config.tolerance) c.tolerance = *config.tolerance;
                agg.cases.push_back(evaluate_case(c));
            } catch (const Error& e) {
                agg.failures.push_back(std::string(case_id(name)) + ": " + e.what());
            }
        }
    }
    if (config.probes) {
        const std::vector<std::pair<const char*, std::function<ProbeReport()>>> probes = {
            {"xi_asymptotics(0,1)", [] { return xi_asymptotics_probe(0.0, 1.0); }},
            {"xi_asymptotics(1/2,5/2)", [] { return xi_asymptotics_probe(0.5, 2.5); }},
            {"compact_remainder", [] { return compact_remainder_probe(); }},
            {"unitary_maps", [] { return unitary_map_probe(); }},
        };
        for (const auto& [label, run] : probes) {
            try {
                agg.probes.push_back(run());
            } catch (const Error& e) {
                agg.failures.push_back(std::string(label) + ": " + e.what());
            }
        }
    }
    agg.pass = agg.failures.empty();
    for (const auto& c : agg.cases) agg.pass = agg.pass && c.pass;
    for (const auto& p : agg.probes) agg.pass = agg.pass && p.pass;
    return agg;
}

}  // namespace specres
