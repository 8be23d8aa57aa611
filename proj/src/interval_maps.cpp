#include "specres/interval_maps.hpp"

#include <cmath>
#include <memory>

#include "specres/error.hpp"
#include "specres/interpolation.hpp"

namespace specres {

IntervalMap IntervalMap::even_odd() { return IntervalMap(Kind::EvenOdd, 0.0, 0.0); }

IntervalMap IntervalMap::ab_interval(double a, double b) {
    if (!(b > a)) throw InvalidArgument("interval map requires b > a");
    return IntervalMap(Kind::AbInterval, a, b);
}

IntervalMap IntervalMap::pm2() { return IntervalMap(Kind::Pm2, -2.0, 2.0); }

IntervalMap IntervalMap::sigma(double mass) {
    if (!(mass > 0.0)) throw InvalidArgument("sigma map requires mass > 0");
    return IntervalMap(Kind::Sigma, mass, 0.0);
}

const char* IntervalMap::name() const {
    switch (kind_) {
        case Kind::EvenOdd: return "EVEN_ODD";
        case Kind::AbInterval: return "AB_INTERVAL";
        case Kind::Pm2: return "PM2";
        case Kind::Sigma: return "SIGMA";
    }
    return "?";
}

namespace {

// 1/(1 + e^{-t}) without overflow
double logistic(double t) {
    if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
    const double e = std::exp(t);
    return e / (1.0 + e);
}

double sech(double x) { return std::abs(x) > 700.0 ? 0.0 : 1.0 / std::cosh(x); }

}  // namespace

double IntervalMap::energy(double x) const {
    switch (kind_) {
        case Kind::EvenOdd: return x;
        case Kind::AbInterval: return a_ + (b_ - a_) * logistic(2.0 * x);
        case Kind::Pm2: return 2.0 * std::tanh(x);
        case Kind::Sigma: return a_ / std::tanh(0.5 * x);
    }
    return x;
}

double IntervalMap::position(double lambda) const {
    switch (kind_) {
        case Kind::EvenOdd: return lambda;
        case Kind::AbInterval: return 0.5 * std::log((lambda - a_) / (b_ - lambda));
        case Kind::Pm2: return std::atanh(0.5 * lambda);
        case Kind::Sigma: return std::log((lambda + a_) / (lambda - a_));
    }
    return lambda;
}

double IntervalMap::jacobian(double x) const {
    switch (kind_) {
        case Kind::EvenOdd: return 1.0;
        case Kind::AbInterval: return std::sqrt(0.5 * (b_ - a_)) * sech(x);
        case Kind::Pm2: return std::sqrt(2.0) * sech(x);
        // sqrt(2m) e^{x/2}/(e^x - 1) = sqrt(m/2)/sinh(x/2); negative for x < 0
        case Kind::Sigma: return std::abs(x) > 1400.0 ? 0.0 : std::sqrt(0.5 * a_) / std::sinh(0.5 * x);
    }
    return 1.0;
}

std::vector<PointRule> IntervalMap::forward(const std::vector<PointRule>& f) const {
    if (f.size() != native_components()) throw InvalidArgument("forward: wrong number of components");
    if (kind_ == Kind::EvenOdd) {
        const PointRule g = f[0];
        const double s = 1.0 / std::sqrt(2.0);
        return {[g, s](double x) { return s * (g(x) + g(-x)); }, [g, s](double x) { return s * (g(x) - g(-x)); }};
    }
    std::vector<PointRule> out;
    for (const auto& g : f) {
        out.push_back([self = *this, g](double x) {
            const double j = self.jacobian(x);
            return j == 0.0 ? cplx{} : j * g(self.energy(x));
        });
    }
    return out;
}

std::vector<PointRule> IntervalMap::adjoint(const std::vector<PointRule>& h) const {
    if (h.size() != line_components()) throw InvalidArgument("adjoint: wrong number of components");
    if (kind_ == Kind::EvenOdd) {
        const PointRule e = h[0], o = h[1];
        const double s = 1.0 / std::sqrt(2.0);
        return {[e, o, s](double x) {
            const double r = std::abs(x);
            return x >= 0.0 ? s * (e(r) + o(r)) : s * (e(r) - o(r));
        }};
    }
    std::vector<PointRule> out;
    for (const auto& g : h) {
        out.push_back([self = *this, g](double lambda) {
            // Off the native domain, or where the map saturates in double precision, the pulled-back
            // function is taken to vanish.
            const double x = self.position(lambda);
            if (!std::isfinite(x)) return cplx{};
            const double j = self.jacobian(x);
            if (j == 0.0 || !std::isfinite(j)) return cplx{};
            return g(x) / j;
        });
    }
    return out;
}

PointRule interpolant(const GridFunction& f, std::size_t component) {
    const auto values = f.component(component);
    const Grid& grid = f.disc().grid();
    if (const auto* g = std::get_if<UniformGrid>(&grid)) {
        auto ip = std::make_shared<CubicInterpolator<cplx>>(g->x0, g->dx, values);
        return [ip](double x) { return (*ip)(x); };
    }
    if (const auto* g = std::get_if<LogGrid>(&grid)) {
        auto ip = std::make_shared<CubicInterpolator<cplx>>(g->u.x0, g->u.dx, values);
        return [ip](double x) { return x > 0.0 ? (*ip)(std::log(x)) : cplx{}; };
    }
    const auto& g = std::get<SigmaGrid>(grid);
    const std::size_t half = g.branch_size();
    auto lo = std::make_shared<CubicInterpolator<cplx>>(g[0], g.spacing(), values.subspan(0, half));
    auto hi = std::make_shared<CubicInterpolator<cplx>>(g[half], g.spacing(), values.subspan(half, half));
    const double mass = g.mass;
    return [lo, hi, mass](double x) {
        if (x <= -mass) return (*lo)(x);
        if (x >= mass) return (*hi)(x);
        return cplx{};
    };
}

namespace {

GridFunction sample_rules(const Space& target, const std::vector<PointRule>& rules) {
    if (rules.size() == 1) return sample(target, rules[0]);
    return sample(target, rules[0], rules[1]);
}

std::vector<PointRule> interpolants(const GridFunction& f) {
    std::vector<PointRule> out;
    for (std::size_t c = 0; c < f.components(); ++c) out.push_back(interpolant(f, c));
    return out;
}

}  // namespace

GridFunction IntervalMap::forward(const GridFunction& f, const Space& target) const {
    return sample_rules(target, forward(interpolants(f)));
}

GridFunction IntervalMap::adjoint(const GridFunction& h, const Space& target) const {
    return sample_rules(target, adjoint(interpolants(h)));
}

PointRule IntervalMap::transported(const std::function<cplx(double)>& rho) const {
    return [self = *this, rho](double x) { return rho(self.energy(x)); };
}

}  // namespace specres
