#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specres/corpus.hpp"
#include "specres/grids.hpp"
#include "specres/report.hpp"

namespace specres {

enum class CaseName { HilbertEvenOdd, HankelJXi, T3D, FiniteHilbert, WeightedFiniteHilbert, DiracUpsideDown };

const char* case_id(CaseName name);
/// Parses "HILBERT_EVEN_ODD", "HANKEL_JXI", ... (case-insensitive).
CaseName parse_case(const std::string& text);
const std::vector<CaseName>& all_cases();

struct CaseParams {
    double m = 0.5;     ///< Hankel order
    int ell = 0;        ///< angular momentum
    double a = 0.0;     ///< finite interval
    double b = 1.0;
    double mass = 1.0;  ///< Dirac mass

    void validate(CaseName name) const;
};

/// Optional overrides of a case's default grids. n is the kernel-side (native) grid size, L the half
/// width of the line grid, U the half width of the log grid, spectral_n the size of the grid on
/// which the multiplier is applied.
struct GridConfig {
    std::optional<std::size_t> n;
    std::optional<double> L;
    std::optional<double> U;
    std::optional<std::size_t> spectral_n;
};

/// A realised linear map on test functions.
struct OperatorHandle {
    enum class Side { Kernel, Spectral };
    std::string description;
    Side side = Side::Kernel;
    std::function<GridFunction(const TestFunction&)> apply;
};

/// lhs f = rhs f, compared in the norm of the case's native space. If `component` is set only that
/// component of the difference enters the error.
struct Identity {
    std::string name;
    OperatorHandle lhs;
    OperatorHandle rhs;
    std::optional<std::size_t> component;
    /// Compare lhs f with f itself instead of an rhs (the Hankel involution).
    bool against_input = false;
};

struct ResolutionCase {
    CaseName name;
    CaseParams params;
    NamedValues grid;
    Space space;  ///< native space the corpus lives on and errors are measured in
    CorpusSpec corpus;
    double tolerance = 0.0;
    std::vector<Identity> identities;
    /// Symbol of the resolution at a spectral point, for inspection (scalar cases: entry (0,0)).
    std::function<std::complex<double>(double)> symbol;
};

ResolutionCase build_case(CaseName name, const CaseParams& params = {}, const GridConfig& grid = {});

/// Applies every identity to every corpus member (at most corpus_size members, 0 = all).
/// err(f) = ||lhs f - rhs f|| / ||f||; pass iff the largest error is within tolerance.
VerificationReport evaluate_case(const ResolutionCase& c, std::size_t corpus_size = 0);

/// Rows (t, re, im, |value - limit at +inf|) of Xi_m(-t) Xi_mp(t). Passes when the distances
/// decrease along the samples.
ProbeReport xi_asymptotics_probe(double m, double mp, const std::vector<double>& t_samples = {10, 25, 50, 100});

/// r(s) = ||(R_exact - R_simple) f_s|| / ||f_s|| for translated bumps f_s = psi((x - s)/1.5), s = 0, 2, ...
/// Passes when r decreases strictly for s >= 2 and r(s_max) < r(0)/10.
ProbeReport compact_remainder_probe(std::size_t n_shifts = 7, const GridConfig& grid = {});

/// Isometry, inverse consistency and multiplication-operator transport of the four interval maps.
/// Rows: (isometry, inverse, transport) per map in the order EVEN_ODD, AB_INTERVAL, PM2, SIGMA.
ProbeReport unitary_map_probe();

}  // namespace specres
