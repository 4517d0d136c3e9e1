#pragma once
#include <limits>
#include <optional>

#include "cmclab/geometry.hpp"
#include "cmclab/partial_fractions.hpp"

namespace cmclab {

enum class PathParam { FlowTime, ArcLength };
enum class FlowTermination { Completed, CriticalPoint, ChartExit };

struct PathSample {
    double param = 0.0;
    ChartPoint chart;
    Vec point;
    Vec velocity;       // ambient tangent vector at the sample
    Vec chart_velocity; // same vector in chart coordinates
};

struct CurvePath {
    PathParam parametrization = PathParam::FlowTime;
    std::vector<PathSample> samples; // ascending in param; param 0 is the anchor
    FlowTermination forward = FlowTermination::Completed;
    FlowTermination backward = FlowTermination::Completed;
    double richardson_error = std::numeric_limits<double>::quiet_NaN();
};

/// Integrate the tangential-part flow x' = v - <x,v>x - <nu,v>nu with fixed
/// step RK4 on the chart, from t_min <= 0 <= t_max. Each leg stops early when
/// the speed drops below crit_tol (the height function approaches its
/// extremes) or the chart domain is left; the path built so far is kept.
CurvePath integrate_tangent_flow(const Hypersurface& s, const ChartPoint& x0, const Vec& v,
                                 double t_min, double t_max, double dt = 1e-3,
                                 bool richardson = false,
                                 double crit_tol = tol::critical);

/// Resample a flow path by arc length (uniform spacing ds, param 0 at the
/// anchor). Velocities become unit tangents. Arc-length input is returned
/// unchanged.
CurvePath reparametrize_arclength(const Hypersurface& s, const Vec& v,
                                  const CurvePath& path, double ds = 5e-3);

/// Largest tangential component of the second difference of positions; a
/// direct numeric test that an arc-length path is a geodesic.
double max_tangential_acceleration(const Hypersurface& s, const CurvePath& path);

/// Scalars determining the closed-form circle through an anchor point.
struct CircleParams {
    double ratio = 0.0;            // the proportionality constant lambda
    double omega = 0.0;            // sqrt(1 + ratio^-2), the circle frequency
    double anchor_height = 0.0;    // height at the anchor (a)
    double anchor_coheight = 0.0;  // sqrt(omega^-2 - a^2) (b), positive
    double phase = 0.0;            // s1 with -omega*a = sin(omega*s1), in (-pi/2w, pi/2w)
    Vec direction;                 // the fixed ambient vector v
    Vec anchor_point;
    Vec anchor_normal;
    Vec anchor_tangent; // unit vector along the tangential part at the anchor
};

CircleParams circle_params(const Hypersurface& s, const ChartPoint& x, const Vec& v,
                           double ratio);

/// Closed-form circle point and its normal for an anchor on the zero level
/// set of the height function (phase 0). Valid for |s| < pi / (2 omega).
struct CirclePoint {
    Vec point;
    Vec normal;
};
CirclePoint circle_point(const CircleParams& params, double s);

/// Principal curvature transported along the circle: the anchor value kappa
/// maps to -1/ratio + (1+ratio^2)(1/ratio+kappa) / denom(s) with
/// denom(s) = ratio(ratio-kappa)cos(omega s) + 1 + ratio*kappa.
double transport_curvature(double kappa_anchor, double ratio, double s);

/// The tangential stretch factor of the transported frame direction.
double transport_stretch(double kappa_anchor, double ratio, double s);

/// Classification of the anchor curvatures (all except the flow direction)
/// into the -1/ratio group, the ratio group, and leftover clusters.
struct CurvaturePartition {
    std::vector<int> low;  // kappa = -1/ratio
    std::vector<int> high; // kappa = ratio
    struct Group {
        double value = 0.0;
        int multiplicity = 0;
    };
    std::vector<Group> groups; // leftover values, clustered
    int n2 = 0;                // card(high)
    double d = 0.0;            // (n(H + 1/ratio) - n2(ratio + 1/ratio)) / (1 + ratio^2)
};

/// Constant-mean-curvature closure test. Leftover curvature clusters feed
/// the exact partial-fraction machinery; the identity they would have to
/// satisfy admits only the zero solution, so any nonempty leftover set is a
/// contradiction certificate.
struct ObstructionVerdict {
    bool consistent = false;
    CurvaturePartition partition;
    std::optional<FractionVerdict> certificate;
    std::string reason;
};

ObstructionVerdict partition_obstruction(const std::vector<double>& curvatures,
                                         double ratio, double mean_h,
                                         double class_tol = tol::classify);

/// Locate a point with height zero by sampling and bisection in the chart.
ChartPoint find_zero_height_anchor(const Hypersurface& s, const Vec& v, Lcg& rng,
                                   double tol = 1e-13);

} // namespace cmclab
