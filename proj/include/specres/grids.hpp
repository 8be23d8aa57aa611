#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <variant>
#include <vector>

namespace specres {

using cplx = std::complex<double>;

/// How a uniform grid places its nodes inside the covered interval.
enum class NodeRule {
    Midpoint,   ///< cell-centred nodes, weight dx each (also used for truncations of R)
    Trapezoid,  ///< endpoint nodes, halved end weights
};

/// Uniform grid x_j = x0 + j*dx, j = 0..n-1, with n a power of two and n >= 8.
struct UniformGrid {
    double x0 = 0.0;
    double dx = 1.0;
    std::size_t n = 0;
    NodeRule rule = NodeRule::Midpoint;

    /// Cell-centred grid on (-half_width, half_width); symmetric and never samples 0.
    static UniformGrid symmetric(double half_width, std::size_t n);
    /// Cell-centred grid on the open interval (a, b).
    static UniformGrid cell_centered(double a, double b, std::size_t n);
    /// Grid whose first and last nodes are a and b (trapezoid weights).
    static UniformGrid closed(double a, double b, std::size_t n);

    double operator[](std::size_t j) const { return x0 + static_cast<double>(j) * dx; }
    double lower() const;
    double upper() const;
    bool symmetric_about_zero() const;
    void validate() const;

    friend bool operator==(const UniformGrid&, const UniformGrid&) = default;
};

/// Grid on R_+ obtained by exponentiating a uniform grid in u = ln x.
struct LogGrid {
    UniformGrid u;

    /// Cell-centred in u on (-U, U); x -> 1/x maps node j to node n-1-j.
    static LogGrid symmetric(double half_width, std::size_t n);
    /// Cell-centred in u on (u_lo, u_hi).
    static LogGrid span(double u_lo, double u_hi, std::size_t n);

    double operator[](std::size_t j) const;
    std::size_t size() const { return u.n; }
    bool symmetric_in_u() const { return u.symmetric_about_zero(); }

    friend bool operator==(const LogGrid&, const LogGrid&) = default;
};

/// Split grid on Sigma = (-outer, -mass) U (mass, outer); negative branch first, each branch n/2
/// cell-centred nodes, so +-mass is never sampled.
struct SigmaGrid {
    double mass = 1.0;
    double outer = 6.0;
    std::size_t n = 0;

    static SigmaGrid make(double mass, double outer, std::size_t n);

    std::size_t branch_size() const { return n / 2; }
    double spacing() const { return (outer - mass) / static_cast<double>(branch_size()); }
    double operator[](std::size_t j) const;
    int branch(std::size_t j) const { return j < branch_size() ? -1 : +1; }
    void validate() const;

    friend bool operator==(const SigmaGrid&, const SigmaGrid&) = default;
};

using Grid = std::variant<UniformGrid, LogGrid, SigmaGrid>;

/// Ambient measure of the L^2 space: dx, or r^2 dr for radial profiles in three dimensions.
enum class Measure { Lebesgue, Radial3D };

/// Grid plus measure with the derived node positions and quadrature weights. Immutable.
class Discretization {
public:
    Discretization(Grid grid, Measure measure);

    const Grid& grid() const { return grid_; }
    Measure measure() const { return measure_; }
    std::size_t size() const { return points_.size(); }
    std::span<const double> points() const { return points_; }
    std::span<const double> weights() const { return weights_; }

    template <class G>
    const G& as() const;

    bool same_as(const Discretization& other) const { return measure_ == other.measure_ && grid_ == other.grid_; }

private:
    Grid grid_;
    Measure measure_;
    std::vector<double> points_;
    std::vector<double> weights_;
};

using Space = std::shared_ptr<const Discretization>;

Space make_space(Grid grid, Measure measure = Measure::Lebesgue);

/// Complex samples (one or two components) on a shared discretization.
class GridFunction {
public:
    explicit GridFunction(Space space, std::size_t components = 1);
    GridFunction(Space space, std::vector<cplx> values, std::size_t components = 1);

    const Space& space() const { return space_; }
    const Discretization& disc() const { return *space_; }
    std::size_t size() const { return space_->size(); }
    std::size_t components() const { return components_; }

    std::span<cplx> component(std::size_t c);
    std::span<const cplx> component(std::size_t c) const;
    std::span<cplx> values() { return values_; }
    std::span<const cplx> values() const { return values_; }

    cplx& operator[](std::size_t j) { return values_[j]; }
    const cplx& operator[](std::size_t j) const { return values_[j]; }

    GridFunction& operator+=(const GridFunction& other);
    GridFunction& operator-=(const GridFunction& other);
    GridFunction& operator*=(cplx s);

private:
    Space space_;
    std::size_t components_;
    std::vector<cplx> values_;
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(cplx s, GridFunction a);

using PointRule = std::function<cplx(double)>;

/// Samples a rule at every node. Throws NonFiniteSample naming the first bad node.
GridFunction sample(const Space& space, const PointRule& rule);
GridFunction sample(const Space& space, const PointRule& first, const PointRule& second);

/// Weighted inner product sum conj(f_j) g_j w_j, summed over components.
cplx inner(const GridFunction& f, const GridFunction& g);
double norm(const GridFunction& f);
/// norm(f - g) without allocating.
double distance(const GridFunction& f, const GridFunction& g);

void require_same_space(const GridFunction& f, const GridFunction& g);

bool is_power_of_two(std::size_t n);

}  // namespace specres
