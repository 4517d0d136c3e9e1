#pragma once
#include <optional>

#include "cmclab/geometry.hpp"
#include "cmclab/quadrature.hpp"

namespace cmclab {

/// Values of the height function <phi, v>, its normal companion <nu, v>,
/// and the tangential part of v at one surface point.
struct SupportSample {
    Vec point;
    Vec normal;
    Vec tangential; // v - height * point - normal_component * normal
    double height = 0.0;
    double normal_component = 0.0;
};

SupportSample support_sample(const Hypersurface& s, const ChartPoint& p, const Vec& v);

/// Residuals of the two gradient identities, measured against chart
/// finite differences of the raw height/normal-component values.
struct GradientResiduals {
    double height = 0.0;           // |grad h - tangential|
    double normal_component = 0.0; // |grad f + A(tangential)|
};
GradientResiduals check_gradient_identities(const Hypersurface& s, const ChartPoint& p,
                                            const Vec& v);

/// Residuals of the two Laplacian identities against the discrete
/// Laplace-Beltrami stencil. The normal-component identity needs constant
/// mean curvature; when the sampled spread exceeds the gate it is skipped.
struct LaplacianResiduals {
    double height = 0.0;
    std::optional<double> normal_component;
    double mean_spread = 0.0;
    bool cmc = false;
};
LaplacianResiduals check_laplacian_identities(const Hypersurface& s, const ChartPoint& p,
                                              const Vec& v, double cmc_gate = tol::cmc);

/// Least-squares fit of height = ratio * normal_component over a sample set.
struct ProportionalityResult {
    double ratio = 0.0;
    double max_residual = 0.0;
    bool holds = false;
};
ProportionalityResult proportionality_scan(const Hypersurface& s, const Vec& v,
                                           const std::vector<ChartPoint>& samples,
                                           double hold_tol = 1e-7);

enum class SupportFamily { Height, NormalComponent };

/// The coordinate height (or normal-component) functions as samplable
/// callables, one per ambient basis vector.
std::vector<SurfaceFn> support_family_functions(const Hypersurface& s, SupportFamily which);

/// Numerical rank of the family's Gram matrix under the quadrature grid.
int gram_dimension(const Hypersurface& s, SupportFamily which, const QuadratureGrid& grid,
                   double rank_tol = 1e-8);

} // namespace cmclab
