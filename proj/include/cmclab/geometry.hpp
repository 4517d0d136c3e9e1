#pragma once
#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cmclab/errors.hpp"
#include "cmclab/jets.hpp"
#include "cmclab/rng.hpp"

namespace cmclab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Default tolerances. Geometry checks distinguish analytic jets from
/// finite-difference fallbacks; everything else is a fixed gate.
namespace tol {
inline constexpr double geo_analytic = 1e-9;
inline constexpr double geo_fd = 1e-6;
inline constexpr double fd = 1e-6;
inline constexpr double rank = 1e-10;
inline constexpr double ode = 1e-7;
inline constexpr double cmc = 1e-6;
inline constexpr double classify = 1e-7;
inline constexpr double tie = 1e-9;
inline constexpr double critical = 1e-8;
inline constexpr double fd_step = 1e-5;
} // namespace tol

struct ChartPoint {
    int chart = 0;
    Vec u;
};

/// Immersion value with first and second chart derivatives at one point.
struct SurfaceJet {
    Vec value;
    std::vector<Vec> d1;              // d phi / d u_i
    std::vector<std::vector<Vec>> d2; // d^2 phi / d u_i d u_j
    bool analytic = true;

    int dim() const { return static_cast<int>(d1.size()); }
    int ambient() const { return static_cast<int>(value.size()); }
};

struct NormalJet {
    Vec value;
    std::vector<Vec> d1; // empty when no derivatives are available
    bool has_d1() const { return !d1.empty(); }
};

/// Shape operator in an orthonormal tangent frame plus derived scalars.
struct CurvatureData {
    Mat shape;
    Vec kappas; // ascending
    double mean_h = 0.0;
    double norm_a_sq = 0.0;
};

struct Chart {
    Vec lo, hi;
    std::vector<std::uint8_t> periodic;
    double sample_margin = 1e-3;
    std::function<Vec(const Vec&)> position;
    std::function<SurfaceJet(const Vec&)> jet;        // null -> central differences
    std::function<NormalJet(const Vec&)> normal_jet;  // null -> orthogonal complement
};

/// An immersed hypersurface M^n of S^{n+1} in R^{n+2} given by charts.
/// (A "base" hypersurface N^{n-1} of S^n uses the same type one dimension
/// down.) Evaluators are immutable; all operations on them are pure.
struct Hypersurface {
    int dim = 0;
    int ambient = 0;
    double orientation = 1.0;
    std::string family;
    std::vector<Chart> charts;
    std::map<std::string, double> metadata;

    bool analytic() const;
    double geo_tol() const { return analytic() ? tol::geo_analytic : tol::geo_fd; }
    /// Copy with analytic evaluators stripped; jets fall back to central
    /// differences with step tol::fd_step.
    Hypersurface without_analytic_jets() const;
};

SurfaceJet immersion_jet(const Hypersurface& s, const ChartPoint& p);
NormalJet unit_normal(const Hypersurface& s, const ChartPoint& p);
CurvatureData shape_operator(const Hypersurface& s, const ChartPoint& p);

/// Orthonormal tangent frame from Gram-Schmidt (QR with positive diagonal)
/// on the chart derivatives: d1 = basis * coeff.
struct TangentFrame {
    Mat basis; // ambient x n
    Mat coeff; // n x n upper triangular
};
TangentFrame tangent_frame(const SurfaceJet& jet);

Mat first_fundamental_form(const SurfaceJet& jet);

/// Unit vector orthogonal to the position and all tangents, oriented so that
/// [d1..., value, normal] is a positively oriented ambient basis, times the
/// surface orientation flag.
Vec complement_normal(const SurfaceJet& jet, double orientation);

/// Gauss-Newton projection of an ambient point onto the chart. Throws
/// ProjectionFailed when it does not converge.
ChartPoint project_to_chart(const Hypersurface& s, const Vec& target,
                            ChartPoint guess, int max_iter = 60);
double distance_to_surface(const Hypersurface& s, const Vec& target,
                           const ChartPoint& guess);

ChartPoint random_point(const Hypersurface& s, Lcg& rng);
std::vector<ChartPoint> sample_points(const Hypersurface& s, int count, Lcg& rng);

// ---- chart calculus ----

using ChartFn = std::function<double(const Vec&)>;

double chart_d1(const ChartFn& f, const Vec& u, int i, double h = tol::fd_step);
double chart_d2(const ChartFn& f, const Vec& u, int i, int j, double h = 1e-4);

/// Intrinsic gradient of a scalar sampled through the chart; the metric
/// comes from the surface jets, the scalar derivatives from central
/// differences, so this is independent of any closed-form gradient.
Vec surface_gradient(const Hypersurface& s, const ChartPoint& p, const ChartFn& f,
                     double h = tol::fd_step);

/// Metric-aware Laplace-Beltrami stencil: second differences of the scalar
/// plus Christoffel terms assembled exactly from the chart jets.
double laplace_beltrami(const Hypersurface& s, const ChartPoint& p, const ChartFn& f,
                        double h = 1e-4);

/// Max - min of mean curvature over a deterministic random sample.
double mean_curvature_spread(const Hypersurface& s, int count = 64,
                             std::uint64_t seed = 17);
double shape_norm_spread(const Hypersurface& s, int count = 64,
                         std::uint64_t seed = 17);

/// Build a SurfaceJet from per-component Taylor jets of the chart map.
SurfaceJet jet_from_taylor(const std::vector<TJet>& comps, int nvars);
NormalJet normal_jet_from_taylor(const std::vector<TJet>& comps, int nvars);

} // namespace cmclab
