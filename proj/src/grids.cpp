#include "specres/grids.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specres/error.hpp"

namespace specres {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace {

void require_grid_size(std::size_t n) {
    if (n < 8 || !is_power_of_two(n)) {
        throw InvalidArgument("grid size must be a power of two >= 8, got " + std::to_string(n));
    }
}

}  // namespace

UniformGrid UniformGrid::symmetric(double half_width, std::size_t n) {
    if (!(half_width > 0.0)) throw InvalidArgument("half width must be positive");
    return cell_centered(-half_width, half_width, n);
}

UniformGrid UniformGrid::cell_centered(double a, double b, std::size_t n) {
    require_grid_size(n);
    if (!(b > a)) throw InvalidArgument("interval requires b > a");
    const double dx = (b - a) / static_cast<double>(n);
    return UniformGrid{a + 0.5 * dx, dx, n, NodeRule::Midpoint};
}

UniformGrid UniformGrid::closed(double a, double b, std::size_t n) {
    require_grid_size(n);
    if (!(b > a)) throw InvalidArgument("interval requires b > a");
    return UniformGrid{a, (b - a) / static_cast<double>(n - 1), n, NodeRule::Trapezoid};
}

double UniformGrid::lower() const { return rule == NodeRule::Midpoint ? x0 - 0.5 * dx : x0; }

double UniformGrid::upper() const {
    const double last = (*this)[n - 1];
    return rule == NodeRule::Midpoint ? last + 0.5 * dx : last;
}

bool UniformGrid::symmetric_about_zero() const {
    const double tol = 1e-12 * std::max(1.0, std::abs(x0));
    return std::abs(x0 + (*this)[n - 1]) <= tol;
}

void UniformGrid::validate() const {
    require_grid_size(n);
    if (!(dx > 0.0) || !std::isfinite(dx) || !std::isfinite(x0)) throw InvalidArgument("grid spacing must be positive");
}

LogGrid LogGrid::symmetric(double half_width, std::size_t n) { return LogGrid{UniformGrid::symmetric(half_width, n)}; }

LogGrid LogGrid::span(double u_lo, double u_hi, std::size_t n) { return LogGrid{UniformGrid::cell_centered(u_lo, u_hi, n)}; }

double LogGrid::operator[](std::size_t j) const { return std::exp(u[j]); }

SigmaGrid SigmaGrid::make(double mass, double outer, std::size_t n) {
    SigmaGrid g{mass, outer, n};
    g.validate();
    return g;
}

double SigmaGrid::operator[](std::size_t j) const {
    const std::size_t nb = branch_size();
    const double h = spacing();
    if (j < nb) return -outer + (static_cast<double>(j) + 0.5) * h;
    return mass + (static_cast<double>(j - nb) + 0.5) * h;
}

void SigmaGrid::validate() const {
    require_grid_size(n);
    if (!(mass > 0.0)) throw InvalidArgument("Sigma grid needs mass > 0");
    if (!(outer > mass)) throw InvalidArgument("Sigma grid needs outer > mass");
}

Discretization::Discretization(Grid grid, Measure measure) : grid_(std::move(grid)), measure_(measure) {
    std::visit(
        [this](const auto& g) {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, UniformGrid>) {
                g.validate();
                points_.resize(g.n);
                weights_.assign(g.n, g.dx);
                for (std::size_t j = 0; j < g.n; ++j) points_[j] = g[j];
                if (g.rule == NodeRule::Trapezoid) {
                    weights_.front() *= 0.5;
                    weights_.back() *= 0.5;
                }
            } else if constexpr (std::is_same_v<G, LogGrid>) {
                g.u.validate();
                points_.resize(g.size());
                weights_.resize(g.size());
                for (std::size_t j = 0; j < g.size(); ++j) {
                    points_[j] = g[j];
                    weights_[j] = points_[j] * g.u.dx;  // dx = x du
                }
            } else {
                g.validate();
                points_.resize(g.n);
                weights_.assign(g.n, g.spacing());
                for (std::size_t j = 0; j < g.n; ++j) points_[j] = g[j];
            }
        },
        grid_);
    if (measure_ == Measure::Radial3D) {
        for (std::size_t j = 0; j < points_.size(); ++j) {
            if (!(points_[j] > 0.0)) throw InvalidArgument("r^2 dr measure needs positive nodes");
            weights_[j] *= points_[j] * points_[j];
        }
    }
}

template <class G>
const G& Discretization::as() const {
    if (const auto* g = std::get_if<G>(&grid_)) return *g;
    throw InvalidArgument("grid function lives on the wrong kind of grid");
}

template const UniformGrid& Discretization::as<UniformGrid>() const;
template const LogGrid& Discretization::as<LogGrid>() const;
template const SigmaGrid& Discretization::as<SigmaGrid>() const;

Space make_space(Grid grid, Measure measure) { return std::make_shared<const Discretization>(std::move(grid), measure); }

GridFunction::GridFunction(Space space, std::size_t components)
    : space_(std::move(space)), components_(components), values_(space_->size() * components) {
    if (components_ == 0 || components_ > 2) throw InvalidArgument("grid functions have one or two components");
}

GridFunction::GridFunction(Space space, std::vector<cplx> values, std::size_t components)
    : space_(std::move(space)), components_(components), values_(std::move(values)) {
    if (components_ == 0 || components_ > 2) throw InvalidArgument("grid functions have one or two components");
    if (values_.size() != space_->size() * components_) {
        throw InvalidArgument("value count " + std::to_string(values_.size()) + " does not match grid size " +
                              std::to_string(space_->size()));
    }
}

std::span<cplx> GridFunction::component(std::size_t c) {
    if (c >= components_) throw InvalidArgument("component index out of range");
    return std::span<cplx>(values_).subspan(c * size(), size());
}

std::span<const cplx> GridFunction::component(std::size_t c) const {
    if (c >= components_) throw InvalidArgument("component index out of range");
    return std::span<const cplx>(values_).subspan(c * size(), size());
}

void require_same_space(const GridFunction& f, const GridFunction& g) {
    if (f.components() != g.components()) throw GridMismatch("component counts differ");
    if (f.space() != g.space() && !f.disc().same_as(g.disc())) throw GridMismatch("grid functions live on different grids");
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
    require_same_space(*this, other);
    for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += other.values_[j];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
    require_same_space(*this, other);
    for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= other.values_[j];
    return *this;
}

GridFunction& GridFunction::operator*=(cplx s) {
    for (auto& v : values_) v *= s;
    return *this;
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(cplx s, GridFunction a) { return a *= s; }

namespace {

void fill(GridFunction& f, std::size_t c, const PointRule& rule) {
    const auto x = f.disc().points();
    auto out = f.component(c);
    for (std::size_t j = 0; j < x.size(); ++j) {
        const cplx v = rule(x[j]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw NonFiniteSample(j, x[j]);
        out[j] = v;
    }
}

}  // namespace

GridFunction sample(const Space& space, const PointRule& rule) {
    GridFunction f(space, 1);
    fill(f, 0, rule);
    return f;
}

GridFunction sample(const Space& space, const PointRule& first, const PointRule& second) {
    GridFunction f(space, 2);
    fill(f, 0, first);
    fill(f, 1, second);
    return f;
}

cplx inner(const GridFunction& f, const GridFunction& g) {
    require_same_space(f, g);
    const auto w = f.disc().weights();
    const std::size_t n = f.size();
    cplx acc = 0.0;
    for (std::size_t c = 0; c < f.components(); ++c) {
        const auto a = f.component(c);
        const auto b = g.component(c);
        for (std::size_t j = 0; j < n; ++j) acc += std::conj(a[j]) * b[j] * w[j];
    }
    return acc;
}

double norm(const GridFunction& f) {
    const auto w = f.disc().weights();
    const std::size_t n = f.size();
    double acc = 0.0;
    for (std::size_t c = 0; c < f.components(); ++c) {
        const auto a = f.component(c);
        for (std::size_t j = 0; j < n; ++j) acc += std::norm(a[j]) * w[j];
    }
    return std::sqrt(acc);
}

double distance(const GridFunction& f, const GridFunction& g) {
    require_same_space(f, g);
    const auto w = f.disc().weights();
    const std::size_t n = f.size();
    double acc = 0.0;
    for (std::size_t c = 0; c < f.components(); ++c) {
        const auto a = f.component(c);
        const auto b = g.component(c);
        for (std::size_t j = 0; j < n; ++j) acc += std::norm(a[j] - b[j]) * w[j];
    }
    return std::sqrt(acc);
}

}  // namespace specres
