#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specres/grids.hpp"

namespace specres {

/// A test function: exact pointwise rules on its native domain (when known) and samples on the
/// native space of a case.
struct TestFunction {
    std::string label;
    /// For SpectralBump the single rule is the spectral profile h, not the sampled function.
    std::vector<PointRule> rules;
    GridFunction samples;
    /// Closed hull of the support of the rules when compact (bump families), else (0, 0).
    std::pair<double, double> support{0.0, 0.0};
};

enum class CorpusFamily {
    GaussHermite,   ///< x^degree e^{-x^2/(2 width^2)} on R
    Bump,           ///< psi((x - center)/width) with psi(u) = exp(-1/(1-u^2))
    LogGauss,       ///< x^{-1/2} exp(-(ln x - center)^2/(2 width^2)) on R_+
    SpectralBump,   ///< g = F_ell h for a bump h in the spectral variable (radial 3D space)
    TwoBranchBump,  ///< C^2-valued, one bump on each branch of Sigma; centres in units of the mass
};

const char* family_name(CorpusFamily family);

struct CorpusMember {
    double center = 0.0;
    double width = 1.0;
    int degree = 0;
    /// TwoBranchBump: the negative-branch bump sits at -center2 (units of the mass).
    double center2 = 0.0;
    double width2 = 0.0;
};

struct CorpusSpec {
    CorpusFamily family = CorpusFamily::Bump;
    std::vector<CorpusMember> members;
    Space space;
    int ell = 0;        ///< SpectralBump only
    double mass = 1.0;  ///< TwoBranchBump only
};

/// Bump profile exp(-1/(1-u^2)) on |u| < 1, zero elsewhere.
double bump(double u);

/// Deterministic samples of every member. Throws NumericalRejection naming the member if it does
/// not vanish below 1e-12 at the ends of the grid, measured in flat coordinates (x^{d/2} |f| on log grids).
std::vector<TestFunction> make_corpus(const CorpusSpec& spec);

}  // namespace specres
