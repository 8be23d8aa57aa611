#include "specres/resolutions.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>

#include "specres/diagonal.hpp"
#include "specres/error.hpp"
#include "specres/interval_maps.hpp"
#include "specres/kernels.hpp"
#include "specres/specfun.hpp"

namespace specres {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI(0.0, 1.0);

struct CaseInfo {
    CaseName name;
    const char* id;
};

constexpr CaseInfo kCases[] = {
    {CaseName::HilbertEvenOdd, "HILBERT_EVEN_ODD"},
    {CaseName::HankelJXi, "HANKEL_JXI"},
    {CaseName::T3D, "T3D"},
    {CaseName::FiniteHilbert, "FINITE_HILBERT"},
    {CaseName::WeightedFiniteHilbert, "WEIGHTED_FINITE_HILBERT"},
    {CaseName::DiracUpsideDown, "DIRAC_UPSIDE_DOWN"},
};

Symbol scalar(std::string name, std::function<cplx(double)> f, std::optional<cplx> lo = {}, std::optional<cplx> hi = {}) {
    return Symbol{std::move(name), std::move(f), lo, hi};
}

GridFunction sample_rules(const Space& space, const std::vector<PointRule>& rules) {
    return rules.size() == 1 ? sample(space, rules[0]) : sample(space, rules[0], rules[1]);
}

void require_rules(const TestFunction& f) {
    if (f.rules.empty()) throw InvalidArgument("test function " + f.label + " has no pointwise rule");
}

OperatorHandle kernel_op(std::string d, std::function<GridFunction(const TestFunction&)> f) {
    return OperatorHandle{std::move(d), OperatorHandle::Side::Kernel, std::move(f)};
}

OperatorHandle spectral_op(std::string d, std::function<GridFunction(const TestFunction&)> f) {
    return OperatorHandle{std::move(d), OperatorHandle::Side::Spectral, std::move(f)};
}

// Multiplies each component pointwise by w(x).
GridFunction times(const std::function<double(double)>& w, GridFunction f) {
    const auto x = f.disc().points();
    for (std::size_t c = 0; c < f.components(); ++c) {
        auto v = f.component(c);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] *= w(x[j]);
    }
    return f;
}

Symbol tanh_symbol(double scale) {
    return scalar("tanh", [scale](double k) { return cplx(tanh_pi(scale * k)); }, -1.0, 1.0);
}

Symbol sech_symbol(double scale) {
    return scalar("sech", [scale](double k) { return cplx(sech_pi(scale * k)); }, 0.0, 0.0);
}

// Weighted resolution -1/2 [b+(X) tanh(pi D) b+(X)^{-1} - i b-(X) sech(pi D) b+(X)^{-1}] on the line.
GridFunction weighted_resolution(const GridFunction& h) {
    const auto h1 = times([](double x) { return 1.0 / b_plus(x); }, h);
    const auto t = times(b_plus, apply_symbol_D(tanh_symbol(1.0), h1));
    const auto s = times(b_minus, apply_symbol_D(sech_symbol(1.0), h1));
    return cplx(-0.5) * (t - kI * s);
}

// The simplified form -1/2 [tanh(pi D) - i tanh(X) sech(pi D)].
GridFunction simplified_resolution(const GridFunction& h) {
    const auto t = apply_symbol_D(tanh_symbol(1.0), h);
    const auto s = times([](double x) { return std::tanh(x); }, apply_symbol_D(sech_symbol(1.0), h));
    return cplx(-0.5) * (t - kI * s);
}

struct Defaults {
    std::size_t n;
    double L;
    double U;
    std::size_t spectral_n;
};

Defaults defaults_for(CaseName name) {
    switch (name) {
        case CaseName::HilbertEvenOdd: return {1u << 14, 16.0, 40.0, 1u << 15};
        case CaseName::HankelJXi: return {1u << 13, 0.0, 30.0, 1u << 13};
        case CaseName::T3D: return {1u << 14, 0.0, 40.0, 1u << 14};
        case CaseName::FiniteHilbert: return {1u << 13, 24.0, 0.0, 1u << 16};
        case CaseName::WeightedFiniteHilbert: return {1u << 13, 64.0, 0.0, 1u << 16};
        case CaseName::DiracUpsideDown: return {1u << 13, 32.0, 0.0, 1u << 15};
    }
    return {};
}

ResolutionCase hilbert_even_odd(const GridConfig& cfg) {
    const Defaults d = defaults_for(CaseName::HilbertEvenOdd);
    const double L = cfg.L.value_or(d.L), U = cfg.U.value_or(d.U);
    const std::size_t n = cfg.n.value_or(d.n), sn = cfg.spectral_n.value_or(d.spectral_n);
    ResolutionCase c{CaseName::HilbertEvenOdd, {}, {{"n", double(n)}, {"L", L}, {"U", U}, {"spectral_n", double(sn)}},
                     make_space(UniformGrid::symmetric(L, n)), {}, 1e-5, {}, {}};
    c.corpus.family = CorpusFamily::GaussHermite;
    c.corpus.space = c.space;
    for (int deg = 0; deg <= 5; ++deg) c.corpus.members.push_back(CorpusMember{0.0, 1.0, deg});
    for (int deg = 0; deg <= 1; ++deg) c.corpus.members.push_back(CorpusMember{0.0, 0.7, deg});

    const Space log_space = make_space(LogGrid::symmetric(U, sn));
    const Space native = c.space;
    const MatrixSymbol m = MatrixSymbol::off_diagonal(
        "-i[[0, tanh - i sech], [tanh + i sech, 0]]",
        scalar("-i(tanh - i sech)", [](double t) { return -kI * cplx(tanh_pi(t), -sech_pi(t)); }, kI, -kI),
        scalar("-i(tanh + i sech)", [](double t) { return -kI * cplx(tanh_pi(t), sech_pi(t)); }, kI, -kI));
    const auto resolution = spectral_op("U* M(A) U", [=](const TestFunction& f) {
        require_rules(f);
        const auto map = IntervalMap::even_odd();
        const auto h = sample_rules(log_space, map.forward(f.rules));
        return map.adjoint(apply_symbol_A(m, h), native);
    });
    const auto pv = kernel_op("P.v. quadrature", [](const TestFunction& f) { return hilbert_pv(f.samples); });
    const auto mult = kernel_op("-i sign(D) on the zero-extended lattice", [](const TestFunction& f) { return hilbert_multiplier(f.samples); });
    c.identities = {{"pv_vs_multiplier", pv, {mult.description, OperatorHandle::Side::Spectral, mult.apply}, {}, false},
                    {"identity_pv", pv, resolution, {}, false},
                    {"identity_multiplier", mult, resolution, {}, false}};
    c.symbol = [m](double t) { return m.entry[1](t); };
    return c;
}

ResolutionCase hankel_jxi(const CaseParams& p, const GridConfig& cfg) {
    const Defaults d = defaults_for(CaseName::HankelJXi);
    const double U = cfg.U.value_or(d.U);
    const std::size_t n = cfg.n.value_or(d.n);
    const double m = p.m;
    ResolutionCase c{CaseName::HankelJXi, p, {{"n", double(n)}, {"U", U}}, make_space(LogGrid::symmetric(U, n)), {}, 1e-4,
                     {}, {}};
    c.corpus.family = CorpusFamily::LogGauss;
    c.corpus.space = c.space;
    c.corpus.members = {{0.0, 1.0}, {0.5, 0.8}, {-0.7, 1.2}, {1.0, 0.6}};
    const Symbol xi = scalar("Xi_m", [m](double t) { return xi_symbol(m, t); });
    const Symbol xi_neg = reflected(xi);
    const auto hank = kernel_op("H_m H_m", [m](const TestFunction& f) { return hankel(m, hankel(m, f.samples)); });
    const auto jh = kernel_op("J H_m", [m](const TestFunction& f) { return inversion_j(hankel(m, f.samples)); });
    const auto hj = kernel_op("H_m J", [m](const TestFunction& f) { return hankel(m, inversion_j(f.samples)); });
    const auto rhs = spectral_op("Xi_m(A)", [xi](const TestFunction& f) { return apply_symbol_A(xi, f.samples); });
    const auto rhs_neg = spectral_op("Xi_m(-A)", [xi_neg](const TestFunction& f) { return apply_symbol_A(xi_neg, f.samples); });
    const auto identity = spectral_op("identity", [](const TestFunction& f) { return f.samples; });
    c.identities = {{"involution", hank, identity, {}, true},
                    {"J_hankel", jh, rhs, {}, false},
                    {"hankel_J", hj, rhs_neg, {}, false}};
    c.symbol = xi.eval;
    return c;
}

ResolutionCase t3d(const CaseParams& p, const GridConfig& cfg) {
    const Defaults d = defaults_for(CaseName::T3D);
    const double U = cfg.U.value_or(d.U);
    const std::size_t n = cfg.n.value_or(d.n);
    const int ell = p.ell;
    // ln r in (-U, 0.4 U): r^{3/2} g decays only like r^{3/2} towards 0, while at large r the r^3
    // weight would amplify the quadrature floor of the rapidly decaying samples.
    ResolutionCase c{CaseName::T3D, p, {{"n", double(n)}, {"U", U}, {"kappa_nodes", 2048.0}},
                     make_space(LogGrid::span(-U, 0.4 * U, n), Measure::Radial3D), {}, 1e-4, {}, {}};
    c.corpus.family = CorpusFamily::SpectralBump;
    c.corpus.space = c.space;
    c.corpus.ell = ell;
    c.corpus.members = {{1.75, 1.25}, {1.5, 0.75}, {2.5, 1.0}, {1.0, 0.5}};
    const Symbol phi = scalar("phi_ell", [ell](double t) { return phi_ell(ell, t); }, 0.0, 1.0);
    const Space space = c.space;
    const auto lhs = kernel_op("T_ell from the spectral profile", [ell, space](const TestFunction& f) {
        require_rules(f);
        return t3d_from_profile(ell, f.rules[0], f.support.first, f.support.second, space, 2048);
    });
    const auto lhs_kernel = kernel_op("T_ell via F_ell", [ell](const TestFunction& f) { return t3d_kernel(ell, f.samples); });
    const auto rhs = spectral_op("phi_ell(A)", [phi](const TestFunction& f) { return apply_symbol_A(phi, f.samples); });
    c.identities = {{"identity", lhs, rhs, {}, false}, {"identity_kernel_path", lhs_kernel, rhs, {}, false}};
    c.symbol = phi.eval;
    return c;
}

ResolutionCase finite_hilbert_case(const CaseParams& p, const GridConfig& cfg) {
    const Defaults d = defaults_for(CaseName::FiniteHilbert);
    const double L = cfg.L.value_or(d.L);
    const std::size_t n = cfg.n.value_or(d.n), sn = cfg.spectral_n.value_or(d.spectral_n);
    const double a = p.a, b = p.b;
    ResolutionCase c{CaseName::FiniteHilbert, p, {{"n", double(n)}, {"L", L}, {"spectral_n", double(sn)}},
                     make_space(UniformGrid::cell_centered(a, b, n)), {}, 1e-5, {}, {}};
    c.corpus.family = CorpusFamily::Bump;
    c.corpus.space = c.space;
    const double len = b - a;
    for (auto [cf, wf] : std::initializer_list<std::pair<double, double>>{
             {0.5, 0.3}, {0.4, 0.2}, {0.6, 0.25}, {0.3, 0.15}, {0.7, 0.2}, {0.5, 0.45}, {0.25, 0.2}, {0.8, 0.15}}) {
        c.corpus.members.push_back(CorpusMember{a + cf * len, wf * len});
    }
    const Space line = make_space(UniformGrid::symmetric(L, sn));
    const Space native = c.space;
    const Symbol sym = scalar("-i tanh(pi k/2)", [](double k) { return -kI * tanh_pi(0.5 * k); }, kI, -kI);
    const auto lhs = kernel_op("finite Hilbert quadrature", [a, b](const TestFunction& f) { return finite_hilbert(a, b, f.samples); });
    const auto rhs = spectral_op("U* (-i tanh(pi D/2)) U", [=](const TestFunction& f) {
        require_rules(f);
        const auto map = IntervalMap::ab_interval(a, b);
        const auto h = sample_rules(line, map.forward(f.rules));
        return map.adjoint(apply_symbol_D(sym, h), native);
    });
    c.identities = {{"identity", lhs, rhs, {}, false}};
    c.symbol = sym.eval;
    return c;
}

ResolutionCase weighted_case(const GridConfig& cfg) {
    const Defaults d = defaults_for(CaseName::WeightedFiniteHilbert);
    const double L = cfg.L.value_or(d.L);
    const std::size_t n = cfg.n.value_or(d.n), sn = cfg.spectral_n.value_or(d.spectral_n);
    ResolutionCase c{CaseName::WeightedFiniteHilbert, {}, {{"n", double(n)}, {"L", L}, {"spectral_n", double(sn)}},
                     make_space(UniformGrid::cell_centered(-2.0, 2.0, n)), {}, 1e-4, {}, {}};
    c.corpus.family = CorpusFamily::Bump;
    c.corpus.space = c.space;
    c.corpus.members = {{0.0, 1.5}, {0.5, 1.0}, {-0.6, 0.8}, {0.2, 0.5}, {1.0, 0.4}, {-1.0, 0.5}};
    const Space line = make_space(UniformGrid::symmetric(L, sn));
    const Space native = c.space;
    const auto lhs = kernel_op("weighted finite Hilbert quadrature", [](const TestFunction& f) {
        return weighted_finite_hilbert(f.samples);
    });
    const auto rhs = spectral_op("U* R U", [=](const TestFunction& f) {
        require_rules(f);
        const auto map = IntervalMap::pm2();
        const auto h = sample_rules(line, map.forward(f.rules));
        return map.adjoint(weighted_resolution(h), native);
    });
    c.identities = {{"identity", lhs, rhs, {}, false}};
    c.symbol = [](double k) { return cplx(-0.5 * tanh_pi(k)); };
    return c;
}

ResolutionCase dirac_case(const CaseParams& p, const GridConfig& cfg) {
    const Defaults d = defaults_for(CaseName::DiracUpsideDown);
    const double L = cfg.L.value_or(d.L);
    const std::size_t n = cfg.n.value_or(d.n), sn = cfg.spectral_n.value_or(d.spectral_n);
    const double mass = p.mass;
    ResolutionCase c{CaseName::DiracUpsideDown, p,
                     {{"n", double(n)}, {"outer", 6.0 * mass}, {"L", L}, {"spectral_n", double(sn)}},
                     make_space(SigmaGrid::make(mass, 6.0 * mass, n)), {}, 1e-4, {}, {}};
    c.corpus.family = CorpusFamily::TwoBranchBump;
    c.corpus.space = c.space;
    c.corpus.mass = mass;
    c.corpus.members = {{3.0, 1.5, 0, 3.0, 1.5}, {2.5, 1.0, 0, 3.5, 1.2}, {4.0, 0.9, 0, 2.0, 0.5}, {2.0, 0.5, 0, 4.0, 1.0}};
    const Space line = make_space(UniformGrid::symmetric(L, sn));
    const Space native = c.space;
    const MatrixSymbol sym = MatrixSymbol::diagonal(
        "i diag(tanh(2 pi D) + i sech(2 pi D), tanh(2 pi D) - i sech(2 pi D))",
        scalar("i(tanh + i sech)", [](double k) { return kI * cplx(tanh_pi(2.0 * k), sech_pi(2.0 * k)); }, -kI, kI),
        scalar("i(tanh - i sech)", [](double k) { return kI * cplx(tanh_pi(2.0 * k), -sech_pi(2.0 * k)); }, -kI, kI));
    const auto lhs = kernel_op("Dirac kernel quadrature", [mass](const TestFunction& f) { return dirac_kernel(mass, f.samples); });
    const auto rhs = spectral_op("U* i diag(...) U", [=](const TestFunction& f) {
        require_rules(f);
        const auto map = IntervalMap::sigma(mass);
        const auto h = sample_rules(line, map.forward(f.rules));
        return map.adjoint(apply_symbol_D(sym, h), native);
    });
    c.identities = {{"component_1", lhs, rhs, 0, false}, {"component_2", lhs, rhs, 1, false}};
    c.symbol = sym.entry[0].eval;
    return c;
}

double component_norm(const GridFunction& f, std::size_t c) {
    const auto w = f.disc().weights();
    const auto v = f.component(c);
    double s = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) s += std::norm(v[j]) * w[j];
    return std::sqrt(s);
}

}  // namespace

const char* case_id(CaseName name) {
    for (const auto& c : kCases) {
        if (c.name == name) return c.id;
    }
    return "?";
}

CaseName parse_case(const std::string& text) {
    std::string upper = text;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) {
        return ch == '-' ? '_' : static_cast<char>(std::toupper(ch));
    });
    for (const auto& c : kCases) {
        if (upper == c.id) return c.name;
    }
    throw InvalidArgument("unknown case '" + text + "'");
}

const std::vector<CaseName>& all_cases() {
    static const std::vector<CaseName> names = [] {
        std::vector<CaseName> v;
        for (const auto& c : kCases) v.push_back(c.name);
        return v;
    }();
    return names;
}

void CaseParams::validate(CaseName name) const {
    switch (name) {
        case CaseName::HankelJXi:
            if (!(m > -1.0)) throw InvalidArgument("Hankel order must satisfy m > -1");
            if (m < 0.0) throw InvalidArgument("Hankel orders in (-1, 0) are not supported; use m >= 0");
            break;
        case CaseName::T3D:
            if (ell < 0) throw InvalidArgument("ell must be non-negative");
            break;
        case CaseName::FiniteHilbert:
            if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) throw InvalidArgument("finite interval requires b > a");
            break;
        case CaseName::DiracUpsideDown:
            if (!(mass > 0.0) || !std::isfinite(mass)) throw InvalidArgument("mass must be positive");
            break;
        default: break;
    }
}

ResolutionCase build_case(CaseName name, const CaseParams& params, const GridConfig& grid) {
    params.validate(name);
    switch (name) {
        case CaseName::HilbertEvenOdd: return hilbert_even_odd(grid);
        case CaseName::HankelJXi: return hankel_jxi(params, grid);
        case CaseName::T3D: return t3d(params, grid);
        case CaseName::FiniteHilbert: return finite_hilbert_case(params, grid);
        case CaseName::WeightedFiniteHilbert: return weighted_case(grid);
        case CaseName::DiracUpsideDown: return dirac_case(params, grid);
    }
    throw InvalidArgument("unknown case");
}

VerificationReport evaluate_case(const ResolutionCase& c, std::size_t corpus_size) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.case_id = case_id(c.name);
    switch (c.name) {
        case CaseName::HankelJXi: r.params = {{"m", c.params.m}}; break;
        case CaseName::T3D: r.params = {{"ell", double(c.params.ell)}}; break;
        case CaseName::FiniteHilbert: r.params = {{"a", c.params.a}, {"b", c.params.b}}; break;
        case CaseName::DiracUpsideDown: r.params = {{"mass", c.params.mass}}; break;
        default: break;
    }
    r.grid = c.grid;
    r.tolerance = c.tolerance;
    auto corpus = make_corpus(c.corpus);
    if (corpus_size > 0 && corpus_size < corpus.size()) corpus.erase(corpus.begin() + static_cast<std::ptrdiff_t>(corpus_size), corpus.end());
    for (const auto& f : corpus) r.corpus.push_back(f.label);
    r.errors.assign(corpus.size(), 0.0);
    // Identities often share an operator (same description); apply each one once per member.
    std::vector<std::map<std::string, GridFunction>> cache(corpus.size());
    auto apply = [&](const OperatorHandle& op, std::size_t k) -> const GridFunction& {
        auto it = cache[k].find(op.description);
        if (it == cache[k].end()) it = cache[k].emplace(op.description, op.apply(corpus[k])).first;
        return it->second;
    };
    for (const auto& id : c.identities) {
        CheckResult check{id.name, {}, 0.0};
        for (std::size_t k = 0; k < corpus.size(); ++k) {
            const auto& f = corpus[k];
            double err = 0.0;
            try {
                const auto& lhs = apply(id.lhs, k);
                const auto& rhs = id.against_input ? f.samples : apply(id.rhs, k);
                const double scale = norm(f.samples);
                if (id.component) {
                    err = component_norm(lhs - rhs, *id.component) / scale;
                } else {
                    err = distance(lhs, rhs) / scale;
                }
            } catch (const NumericalRejection& e) {
                throw NumericalRejection(r.case_id + " / " + id.name + " / " + f.label + ": " + e.what());
            }
            check.errors.push_back(err);
            check.max_error = std::max(check.max_error, err);
            r.errors[k] = std::max(r.errors[k], err);
        }
        r.checks.push_back(std::move(check));
    }
    for (const double e : r.errors) r.max_error = std::max(r.max_error, e);
    r.pass = r.max_error <= r.tolerance;
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

ProbeReport xi_asymptotics_probe(double m, double mp, const std::vector<double>& t_samples) {
    if (!(m > -1.0) || !(mp > -1.0)) throw InvalidArgument("orders must exceed -1");
    const auto t0 = std::chrono::steady_clock::now();
    ProbeReport p;
    p.name = "xi_asymptotics";
    p.params = {{"m", m}, {"mp", mp}};
    p.columns = {"t", "re", "im", "distance"};
    p.criterion = "distance to exp(-i pi (m - mp)/2) non-increasing along t";
    const cplx limit = xi_product_limit(m, mp, +1);
    p.pass = true;
    double previous = std::numeric_limits<double>::infinity();
    for (const double t : t_samples) {
        const cplx v = xi_product(m, mp, t);
        const double dist = std::abs(v - limit);
        p.rows.push_back({t, v.real(), v.imag(), dist});
        if (dist > previous) p.pass = false;
        previous = dist;
    }
    p.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return p;
}

ProbeReport compact_remainder_probe(std::size_t n_shifts, const GridConfig& grid) {
    if (n_shifts < 2) throw InvalidArgument("compact remainder probe needs at least two shifts");
    const auto t0 = std::chrono::steady_clock::now();
    const double L = grid.L.value_or(64.0);
    const std::size_t n = grid.spectral_n.value_or(1u << 16);
    const Space line = make_space(UniformGrid::symmetric(L, n));
    ProbeReport p;
    p.name = "compact_remainder";
    p.params = {{"L", L}, {"n", double(n)}, {"width", 1.5}};
    p.columns = {"s", "r"};
    p.criterion = "r(s) strictly decreasing for s >= 2 and r(s_max) < r(0)/10";
    std::vector<double> r;
    for (std::size_t k = 0; k < n_shifts; ++k) {
        const double s = 2.0 * static_cast<double>(k);
        const auto f = sample(line, [s](double x) { return cplx(bump((x - s) / 1.5)); });
        const double value = distance(weighted_resolution(f), simplified_resolution(f)) / norm(f);
        r.push_back(value);
        p.rows.push_back({s, value});
    }
    p.pass = r.back() < r.front() / 10.0;
    for (std::size_t k = 2; k < r.size(); ++k) p.pass = p.pass && r[k] < r[k - 1];
    p.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return p;
}

ProbeReport unitary_map_probe() {
    const auto t0 = std::chrono::steady_clock::now();
    ProbeReport p;
    p.name = "unitary_maps";
    p.columns = {"map", "isometry", "inverse", "transport"};
    p.criterion = "map 0..3 = EVEN_ODD, AB_INTERVAL(0,1), PM2, SIGMA(1): isometry <= 1e-8, inverse <= 1e-6, transport <= 1e-10";
    p.pass = true;
    auto rho = [](double l) { return cplx(1.0 / (1.0 + l * l)); };

    struct Setup {
        IntervalMap map;
        CorpusSpec corpus;
        Space line;
    };
    std::vector<Setup> setups;
    {
        CorpusSpec s{CorpusFamily::GaussHermite, {}, make_space(UniformGrid::symmetric(16.0, 1u << 14))};
        for (int d = 0; d <= 3; ++d) s.members.push_back(CorpusMember{0.0, 1.0, d});
        setups.push_back({IntervalMap::even_odd(), s, make_space(LogGrid::symmetric(40.0, 1u << 15))});
    }
    {
        CorpusSpec s{CorpusFamily::Bump, {{0.5, 0.3}, {0.4, 0.2}, {0.7, 0.25}}, make_space(UniformGrid::cell_centered(0.0, 1.0, 1u << 13))};
        setups.push_back({IntervalMap::ab_interval(0.0, 1.0), s, make_space(UniformGrid::symmetric(24.0, 1u << 16))});
    }
    {
        CorpusSpec s{CorpusFamily::Bump, {{0.0, 1.5}, {0.5, 1.0}, {-1.0, 0.5}}, make_space(UniformGrid::cell_centered(-2.0, 2.0, 1u << 13))};
        setups.push_back({IntervalMap::pm2(), s, make_space(UniformGrid::symmetric(24.0, 1u << 16))});
    }
    {
        CorpusSpec s{CorpusFamily::TwoBranchBump, {{3.0, 1.5, 0, 3.0, 1.5}, {2.5, 1.0, 0, 3.5, 1.2}},
                     make_space(SigmaGrid::make(1.0, 6.0, 1u << 13))};
        setups.push_back({IntervalMap::sigma(1.0), s, make_space(UniformGrid::symmetric(24.0, 1u << 16))});
    }
    for (std::size_t k = 0; k < setups.size(); ++k) {
        const auto& st = setups[k];
        double iso = 0.0, inv = 0.0, transport = 0.0;
        for (const auto& f : make_corpus(st.corpus)) {
            const auto rules = st.map.forward(f.rules);
            const auto h = sample_rules(st.line, rules);
            const double nf = norm(f.samples);
            iso = std::max(iso, std::abs(norm(h) - nf) / nf);
            inv = std::max(inv, distance(st.map.adjoint(h, f.samples.space()), f.samples) / nf);
            // U rho(L) U* h against rho(energy(X)) h, pointwise on the line grid
            std::vector<PointRule> back = st.map.adjoint(rules);
            for (auto& b : back) b = [b, rho](double l) { return rho(l) * b(l); };
            const auto lhs = sample_rules(st.line, st.map.forward(back));
            const auto rhs = times([&](double x) { return rho(st.map.energy(x)).real(); }, h);
            double peak = 0.0, diff = 0.0;
            for (std::size_t j = 0; j < h.values().size(); ++j) {
                peak = std::max(peak, std::abs(h.values()[j]));
                diff = std::max(diff, std::abs(lhs.values()[j] - rhs.values()[j]));
            }
            transport = std::max(transport, diff / peak);
        }
        p.rows.push_back({double(k), iso, inv, transport});
        p.pass = p.pass && iso <= 1e-8 && inv <= 1e-6 && transport <= 1e-10;
    }
    p.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return p;
}

}  // namespace specres
