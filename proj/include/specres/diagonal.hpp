#pragma once

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "specres/grids.hpp"

namespace specres {

/// Orientation of the Mellin spectral variable relative to the dilation group
/// [e^{isA} f](x) = e^{s/2} f(e^s x). Fixed by the calibration test in test_diagonal.cpp:
/// the J o Hankel kernel slice reproduces Xi_m(+t), not Xi_m(-t).
inline constexpr int kMellinOrientation = +1;

/// A spectral multiplier t -> C with optional declared limits at -inf and +inf.
struct Symbol {
    std::string name;
    std::function<cplx(double)> eval;
    std::optional<cplx> limit_minus;
    std::optional<cplx> limit_plus;

    cplx operator()(double t) const { return eval(t); }
};

/// 2x2 matrix of scalar symbols, row-major: (0,0), (0,1), (1,0), (1,1).
struct MatrixSymbol {
    std::string name;
    std::array<Symbol, 4> entry;

    static MatrixSymbol diagonal(std::string name, Symbol a, Symbol d);
    static MatrixSymbol off_diagonal(std::string name, Symbol upper, Symbol lower);
    bool is_off_diagonal() const;
};

Symbol constant_symbol(cplx value);
Symbol product(const Symbol& a, const Symbol& b);
Symbol reciprocal(const Symbol& a);
/// t -> a(-t)
Symbol reflected(const Symbol& a);

/// Checks every declared limit at |t| = 1e3 within 1e-2; throws InvalidArgument otherwise.
void check_limits(const Symbol& s);

/// Unitary DFT realisation of the Fourier transform on a uniform grid, or of the Mellin
/// transform on a log grid (W f(u) = e^{d u/2} f(e^u), d = 1 for dx and d = 3 for r^2 dr,
/// followed by the Fourier transform in u). Holds an immutable plan.
class SpectralEngine {
public:
    enum class Kind { Fourier, Mellin };

    /// pad_factor (a power of two) embeds the grid in a zero-extended one of pad_factor times the length.
    static SpectralEngine fourier(const UniformGrid& grid, std::size_t pad_factor = 1);
    static SpectralEngine mellin(const LogGrid& grid, Measure measure = Measure::Lebesgue);

    Kind kind() const { return kind_; }
    std::size_t size() const { return n_; }
    /// Spectral variable (k or t) for each DFT slot.
    const std::vector<double>& frequencies() const { return freq_; }

    /// Unnormalised DFT of the (weighted, padded) samples; slot order follows frequencies().
    std::vector<cplx> to_spectral(std::span<const cplx> values) const;
    /// Inverse of to_spectral, returning samples on the original grid.
    std::vector<cplx> from_spectral(std::vector<cplx> spectrum) const;

    /// Multiplies by sym(k) in spectral space. Throws InvalidArgument if sym is not finite there.
    std::vector<cplx> apply(const Symbol& sym, std::span<const cplx> values) const;
    void apply(const MatrixSymbol& sym, std::span<const cplx> first, std::span<const cplx> second,
               std::span<cplx> out_first, std::span<cplx> out_second) const;

private:
    SpectralEngine() = default;
    std::vector<cplx> sampled(const Symbol& sym) const;

    Kind kind_ = Kind::Fourier;
    std::size_t n_ = 0;        // length of the original grid
    std::size_t padded_ = 0;   // transform length
    std::size_t offset_ = 0;   // first original sample inside the padded buffer
    std::vector<double> freq_;
    std::vector<double> in_scale_;  // W weights (Mellin) or 1
};

/// Dual grid of the unitary DFT: k_p = (p - n/2) dk, dk = 2 pi / (n dx).
UniformGrid dual_grid(const UniformGrid& grid);

/// [F f](k) = (2 pi)^{-1/2} int e^{-ikx} f(x) dx, realised unitarily on the dual grid.
GridFunction fourier(const GridFunction& f);
/// Inverse of fourier(); `target` is the x-grid the spectrum came from.
GridFunction inverse_fourier(const GridFunction& spectrum, const UniformGrid& target);

/// Mellin transform: W then fourier in u; the result lives on the dual t-grid.
GridFunction mellin(const GridFunction& f);

/// F^* sym(k) F f on a uniform grid. Matrix symbols act on two-component functions.
GridFunction apply_symbol_D(const Symbol& sym, const GridFunction& f, std::size_t pad_factor = 1);
GridFunction apply_symbol_D(const MatrixSymbol& sym, const GridFunction& f);

/// sym(A) f on a log grid, A the generator of dilations.
GridFunction apply_symbol_A(const Symbol& sym, const GridFunction& f);
GridFunction apply_symbol_A(const MatrixSymbol& sym, const GridFunction& f);

/// Describes y -> K(1, y) for a kernel homogeneous of degree -1.
struct KernelSlice {
    std::string name;
    std::function<double(double)> slice;
    double support_lo = 0.0;  ///< slice vanishes below (0: no lower cut)
    double support_hi = std::numeric_limits<double>::infinity();
    /// If set, slice(y) = y^{1/2} J_order(y); the oscillatory tail is integrated analytically.
    std::optional<double> bessel_order;
};

struct SymbolTableOptions {
    double t_min = -5.0;
    double t_max = 5.0;
    double spacing = 0.0025;
    double tail_tolerance = 1e-9;
};

/// phi(t) = int_0^inf K(1,y) y^{-1/2+it} dy at a single t. Throws NumericalRejection if the
/// truncated tail is not below the tolerance.
cplx mellin_of_slice(const KernelSlice& kernel, double t, double tail_tolerance = 1e-9);

/// Tabulates mellin_of_slice on [t_min, t_max] and interpolates cubically between nodes;
/// outside the table the quadrature is evaluated directly.
Symbol symbol_from_homogeneous_kernel(const KernelSlice& kernel, const SymbolTableOptions& options = {});

/// Built-in slices: "stieltjes" (1/(pi(1+y))), "hardy" (1{y<1}), "j_hankel" (y^{1/2} J_m(y)).
KernelSlice builtin_kernel(const std::string& name, double m = 0.0);
/// Known closed-form symbol of a built-in kernel.
Symbol builtin_kernel_symbol(const std::string& name, double m = 0.0);

}  // namespace specres
