#pragma once

#include <functional>
#include <vector>

#include "specres/grids.hpp"

namespace specres {

/// Unitary changes of representation.
///   EvenOdd:    L^2(R) -> L^2(R_+; C^2),  f -> sqrt2 (f_even, f_odd)
///   AbInterval: L^2((a,b)) -> L^2(R),      f -> sqrt((b-a)/2) sech(x) f((a + b e^{2x})/(1 + e^{2x}))
///   Pm2:        L^2((-2,2)) -> L^2(R),     f -> sqrt2 sech(x) f(2 tanh x)
///   Sigma:      L^2(Sigma; C^2) -> L^2(R; C^2), f -> sqrt(2m) e^{x/2}/(e^x - 1) f(m (e^x+1)/(e^x-1))
/// "forward" is the map above, "adjoint" its inverse.
class IntervalMap {
public:
    enum class Kind { EvenOdd, AbInterval, Pm2, Sigma };

    static IntervalMap even_odd();
    static IntervalMap ab_interval(double a, double b);
    static IntervalMap pm2();
    static IntervalMap sigma(double mass);

    Kind kind() const { return kind_; }
    const char* name() const;
    /// Components on the native side and on the representation side.
    std::size_t native_components() const { return kind_ == Kind::Sigma ? 2 : 1; }
    std::size_t line_components() const { return kind_ == Kind::EvenOdd || kind_ == Kind::Sigma ? 2 : 1; }

    /// Energy variable as a function of the representation variable (identity for EvenOdd).
    double energy(double x) const;
    /// Inverse of energy().
    double position(double lambda) const;
    /// Signed square root of |d energy/dx|: (U f)(x) = jacobian(x) f(energy(x)).
    double jacobian(double x) const;

    std::vector<PointRule> forward(const std::vector<PointRule>& f) const;
    std::vector<PointRule> adjoint(const std::vector<PointRule>& h) const;

    /// Grid-level versions: the input is interpolated cubically, the output sampled on target.
    GridFunction forward(const GridFunction& f, const Space& target) const;
    GridFunction adjoint(const GridFunction& h, const Space& target) const;

    /// rho(L) transported to the representation: x -> rho(energy(x)).
    PointRule transported(const std::function<cplx(double)>& rho) const;

private:
    IntervalMap(Kind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}
    Kind kind_;
    double a_;
    double b_;  // unused for Pm2 and Sigma; the mass is stored in a_
};

/// Piecewise cubic interpolant of one component of a grid function, zero off the grid.
/// On a log grid the interpolation runs in ln x; on a split grid each branch separately.
PointRule interpolant(const GridFunction& f, std::size_t component = 0);

}  // namespace specres
