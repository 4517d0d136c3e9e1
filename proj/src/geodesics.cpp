#include "cmclab/geodesics.hpp"

#include <algorithm>
#include <cmath>

namespace cmclab {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct FlowEval {
    Vec point;
    Vec tangential;     // ambient v - <x,v>x - <nu,v>nu
    Vec chart_velocity; // the same vector in chart coordinates
    double speed = 0.0;
};

FlowEval eval_flow(const Hypersurface& s, int chart, const Vec& u, const Vec& v) {
    ChartPoint p{chart, u};
    SurfaceJet jet = immersion_jet(s, p);
    NormalJet nu = unit_normal(s, p);
    FlowEval e;
    e.point = jet.value;
    e.tangential = v - jet.value.dot(v) * jet.value - nu.value.dot(v) * nu.value;
    const int n = jet.dim();
    Mat g = first_fundamental_form(jet);
    Vec rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = jet.d1[i].dot(e.tangential);
    e.chart_velocity = g.ldlt().solve(rhs);
    e.speed = e.tangential.norm();
    return e;
}

PathSample to_sample(double param, int chart, const Vec& u, const FlowEval& e) {
    return {param, {chart, u}, e.point, e.tangential, e.chart_velocity};
}

struct Leg {
    std::vector<PathSample> samples; // excluding the anchor
    FlowTermination term = FlowTermination::Completed;
};

Leg run_leg(const Hypersurface& s, int chart, const Vec& u0, const Vec& v,
            double dt_signed, double t_end, double crit) {
    Leg leg;
    Vec u = u0;
    double t = 0.0;
    const int nsteps = static_cast<int>(std::floor(std::abs(t_end) / std::abs(dt_signed) + 1e-9));
    for (int step = 0; step < nsteps; ++step) {
        Vec u_new;
        try {
            Vec k1 = eval_flow(s, chart, u, v).chart_velocity;
            Vec k2 = eval_flow(s, chart, u + 0.5 * dt_signed * k1, v).chart_velocity;
            Vec k3 = eval_flow(s, chart, u + 0.5 * dt_signed * k2, v).chart_velocity;
            Vec k4 = eval_flow(s, chart, u + dt_signed * k3, v).chart_velocity;
            u_new = u + (dt_signed / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            FlowEval e = eval_flow(s, chart, u_new, v);
            if (e.speed < crit) {
                leg.term = FlowTermination::CriticalPoint;
                break;
            }
            t += dt_signed;
            leg.samples.push_back(to_sample(t, chart, u_new, e));
            u = u_new;
        } catch (const OutOfDomain&) {
            leg.term = FlowTermination::ChartExit;
            break;
        } catch (const RankDeficient&) {
            // the chart degenerates (pole of an angle chart): same exit
            leg.term = FlowTermination::ChartExit;
            break;
        }
    }
    return leg;
}

CurvePath assemble_flow(const Hypersurface& s, const ChartPoint& x0, const Vec& v,
                        double t_min, double t_max, double dt, double crit) {
    FlowEval e0 = eval_flow(s, x0.chart, x0.u, v);
    if (e0.speed <= crit)
        throw HitCriticalPoint("flow start is a critical point of the height function");
    Leg fwd = t_max > 0 ? run_leg(s, x0.chart, x0.u, v, dt, t_max, crit) : Leg{};
    Leg bwd = t_min < 0 ? run_leg(s, x0.chart, x0.u, v, -dt, t_min, crit) : Leg{};
    CurvePath path;
    path.parametrization = PathParam::FlowTime;
    path.forward = fwd.term;
    path.backward = bwd.term;
    path.samples.reserve(fwd.samples.size() + bwd.samples.size() + 1);
    for (auto it = bwd.samples.rbegin(); it != bwd.samples.rend(); ++it)
        path.samples.push_back(*it);
    path.samples.push_back(to_sample(0.0, x0.chart, x0.u, e0));
    for (const auto& smp : fwd.samples) path.samples.push_back(smp);
    return path;
}

} // namespace

CurvePath integrate_tangent_flow(const Hypersurface& s, const ChartPoint& x0, const Vec& v,
                                 double t_min, double t_max, double dt, bool richardson,
                                 double crit_tol) {
    if (t_min > 0 || t_max < 0 || dt <= 0) throw BadSpec("bad flow time span");
    CurvePath path = assemble_flow(s, x0, v, t_min, t_max, dt, crit_tol);
    if (richardson) {
        CurvePath fine = assemble_flow(s, x0, v, t_min, t_max, dt / 2.0, crit_tol);
        double dev = 0.0;
        std::size_t j = 0;
        for (const auto& smp : path.samples) {
            while (j + 1 < fine.samples.size() &&
                   fine.samples[j].param < smp.param - dt / 8.0)
                ++j;
            if (std::abs(fine.samples[j].param - smp.param) < dt / 8.0)
                dev = std::max(dev, (fine.samples[j].point - smp.point).norm());
        }
        path.richardson_error = dev;
    }
    return path;
}

CurvePath reparametrize_arclength(const Hypersurface& s, const Vec& v,
                                  const CurvePath& path, double ds) {
    if (path.parametrization == PathParam::ArcLength) return path;
    const int m = static_cast<int>(path.samples.size());
    if (m < 2) throw ZeroSpeed("flow path too short to reparametrize");
    std::vector<double> speed(m);
    for (int i = 0; i < m; ++i) {
        speed[i] = path.samples[i].velocity.norm();
        if (speed[i] <= 0.0) throw ZeroSpeed("flow speed vanishes along the path");
    }
    // cumulative arc length by derivative-corrected trapezoid
    std::vector<double> sp_rate(m);
    for (int i = 0; i < m; ++i) {
        int lo = std::max(0, i - 1), hi = std::min(m - 1, i + 1);
        sp_rate[i] = (speed[hi] - speed[lo]) /
                     (path.samples[hi].param - path.samples[lo].param);
    }
    std::vector<double> arc(m, 0.0);
    for (int i = 0; i + 1 < m; ++i) {
        double h = path.samples[i + 1].param - path.samples[i].param;
        arc[i + 1] = arc[i] + 0.5 * h * (speed[i] + speed[i + 1]) -
                     h * h / 12.0 * (sp_rate[i + 1] - sp_rate[i]);
    }
    int anchor = 0;
    for (int i = 0; i < m; ++i)
        if (std::abs(path.samples[i].param) < 1e-15) anchor = i;
    double shift = arc[anchor];
    for (double& a : arc) a -= shift;

    CurvePath out;
    out.parametrization = PathParam::ArcLength;
    out.forward = path.forward;
    out.backward = path.backward;
    const int chart = path.samples[0].chart.chart;
    double s_lo = std::ceil(arc.front() / ds) * ds;
    double s_hi = std::floor(arc.back() / ds) * ds;
    for (double target = s_lo; target <= s_hi + 1e-12; target += ds) {
        auto it = std::lower_bound(arc.begin(), arc.end(), target);
        int i = std::min<int>(std::max<int>(static_cast<int>(it - arc.begin()) - 1, 0), m - 2);
        double h = path.samples[i + 1].param - path.samples[i].param;
        // Hermite cubic of arc(t) on the interval, solved for the flow time
        double c0 = arc[i], c1 = speed[i];
        double d_arc = arc[i + 1] - arc[i];
        double c2 = (3.0 * d_arc - h * (2.0 * speed[i] + speed[i + 1])) / (h * h);
        double c3 = (-2.0 * d_arc + h * (speed[i] + speed[i + 1])) / (h * h * h);
        double tau = d_arc > 0 ? h * (target - c0) / d_arc : 0.0;
        for (int it2 = 0; it2 < 6; ++it2) {
            double f = ((c3 * tau + c2) * tau + c1) * tau + c0 - target;
            double df = (3.0 * c3 * tau + 2.0 * c2) * tau + c1;
            tau -= f / df;
        }
        // Hermite interpolation of the chart coordinates at that time
        const Vec& ua = path.samples[i].chart.u;
        const Vec& ub = path.samples[i + 1].chart.u;
        const Vec& va = path.samples[i].chart_velocity;
        const Vec& vb = path.samples[i + 1].chart_velocity;
        double w = tau / h;
        double h00 = (1.0 + 2.0 * w) * (1.0 - w) * (1.0 - w);
        double h10 = tau * (1.0 - w) * (1.0 - w);
        double h01 = w * w * (3.0 - 2.0 * w);
        double h11 = tau * w * (w - 1.0);
        Vec u = h00 * ua + h10 * va + h01 * ub + h11 * vb;
        FlowEval e = eval_flow(s, chart, u, v);
        PathSample smp = to_sample(target, chart, u, e);
        smp.velocity = e.tangential / e.speed; // unit tangent in arc length
        out.samples.push_back(std::move(smp));
    }
    return out;
}

double max_tangential_acceleration(const Hypersurface& s, const CurvePath& path) {
    if (path.parametrization != PathParam::ArcLength)
        throw BadSpec("geodesic check expects an arc-length path");
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < path.samples.size(); ++i) {
        double ds = path.samples[i + 1].param - path.samples[i].param;
        Vec acc = (path.samples[i + 1].point - 2.0 * path.samples[i].point +
                   path.samples[i - 1].point) /
                  (ds * ds);
        SurfaceJet jet = immersion_jet(s, path.samples[i].chart);
        TangentFrame frame = tangent_frame(jet);
        worst = std::max(worst, (frame.basis.transpose() * acc).norm());
    }
    return worst;
}

CircleParams circle_params(const Hypersurface& s, const ChartPoint& x, const Vec& v,
                           double ratio) {
    if (ratio == 0.0) throw BadSpec("circle params need a nonzero ratio");
    SurfaceJet jet = immersion_jet(s, x);
    NormalJet nu = unit_normal(s, x);
    CircleParams params;
    params.ratio = ratio;
    params.omega = std::sqrt(1.0 + 1.0 / (ratio * ratio));
    params.anchor_height = jet.value.dot(v);
    double b_sq = 1.0 / (params.omega * params.omega) -
                  params.anchor_height * params.anchor_height;
    if (b_sq <= tol::critical * tol::critical)
        throw CriticalAnchor("anchor sits at a height extreme");
    params.anchor_coheight = std::sqrt(b_sq);
    params.phase = -std::asin(params.omega * params.anchor_height) / params.omega;
    params.direction = v;
    params.anchor_point = jet.value;
    params.anchor_normal = nu.value;
    Vec vt = v - params.anchor_height * jet.value - nu.value.dot(v) * nu.value;
    params.anchor_tangent = vt / vt.norm();
    return params;
}

CirclePoint circle_point(const CircleParams& params, double s) {
    if (std::abs(params.anchor_height) >= 1e-9)
        throw AnchorOffLevelSet("closed form requires an anchor with height zero");
    if (!(std::abs(s) < kPi / (2.0 * params.omega)))
        throw OutOfRange("arc parameter outside the quarter-period window");
    const double w = params.omega, lam = params.ratio;
    Vec center_dir = params.anchor_point + (1.0 / lam) * params.anchor_normal;
    CirclePoint out;
    out.point = (std::sin(w * s) / w) * params.direction +
                ((std::cos(w * s) - 1.0) / (w * w)) * center_dir + params.anchor_point;
    out.normal = lam * w * std::sin(w * s) * params.direction +
                 lam * std::cos(w * s) * center_dir - lam * out.point;
    return out;
}

double transport_curvature(double kappa_anchor, double ratio, double s) {
    double w = std::sqrt(1.0 + 1.0 / (ratio * ratio));
    double den = ratio * (ratio - kappa_anchor) * std::cos(w * s) +
                 (1.0 + ratio * kappa_anchor);
    if (std::abs(den) <= 1e-12)
        throw PoleAtS("curvature transport denominator vanishes at s = " + std::to_string(s));
    return -1.0 / ratio + (1.0 + ratio * ratio) * (1.0 / ratio + kappa_anchor) / den;
}

double transport_stretch(double kappa_anchor, double ratio, double s) {
    double w = std::sqrt(1.0 + 1.0 / (ratio * ratio));
    return (ratio * (ratio - kappa_anchor) * std::cos(w * s) +
            (1.0 + ratio * kappa_anchor)) /
           (1.0 + ratio * ratio);
}

ObstructionVerdict partition_obstruction(const std::vector<double>& curvatures,
                                         double ratio, double mean_h, double class_tol) {
    if (ratio == 0.0) throw BadSpec("partition needs a nonzero ratio");
    ObstructionVerdict out;
    CurvaturePartition& part = out.partition;
    std::vector<double> leftovers;
    for (int i = 0; i < static_cast<int>(curvatures.size()); ++i) {
        double kappa = curvatures[i];
        if (std::abs(kappa + 1.0 / ratio) <= class_tol)
            part.low.push_back(i);
        else if (std::abs(kappa - ratio) <= class_tol)
            part.high.push_back(i);
        else
            leftovers.push_back(kappa);
    }
    part.n2 = static_cast<int>(part.high.size());
    std::sort(leftovers.begin(), leftovers.end());
    for (double kappa : leftovers) {
        if (!part.groups.empty() &&
            kappa - part.groups.back().value <= class_tol) {
            auto& g = part.groups.back();
            g.value = (g.value * g.multiplicity + kappa) / (g.multiplicity + 1);
            g.multiplicity += 1;
        } else {
            part.groups.push_back({kappa, 1});
        }
    }
    const int n = static_cast<int>(curvatures.size()) + 1;
    part.d = (n * (mean_h + 1.0 / ratio) - part.n2 * (ratio + 1.0 / ratio)) /
             (1.0 + ratio * ratio);

    if (part.groups.empty()) {
        out.consistent = std::abs(part.d) <= class_tol;
        out.reason = out.consistent
                         ? "all curvatures sit in the two admissible values and d = 0"
                         : "empty leftover sum cannot equal a nonzero d";
        return out;
    }
    if (part.groups.size() == 1) {
        out.consistent = false;
        out.reason = "a single leftover cluster forces its (nonzero) coefficient to vanish";
        return out;
    }
    // exact certificate: the leftover clusters would have to satisfy a
    // rational-function identity that admits only the zero solution
    Rational lam = rationalize(ratio);
    Rational hr = rationalize(mean_h);
    Rational lam_inv = Rational(1) / lam;
    std::vector<LinearPoly> ps;
    std::vector<Rational> as;
    for (const auto& g : part.groups) {
        Rational kap = rationalize(g.value);
        ps.push_back({lam * (lam - kap), 1 + lam * kap});
        as.push_back(Rational(g.multiplicity) * (lam_inv + kap));
    }
    Rational dr = (Rational(n) * (hr + lam_inv) -
                   Rational(part.n2) * (lam + lam_inv)) /
                  (1 + lam * lam);
    out.certificate = partial_fraction_verdict(ps, as, dr);
    out.consistent = out.certificate->identity_holds;
    out.reason = out.consistent
                     ? "leftover identity degenerated to the zero case"
                     : "partial-fraction identity admits only the zero solution";
    return out;
}

ChartPoint find_zero_height_anchor(const Hypersurface& s, const Vec& v, Lcg& rng,
                                   double tol) {
    auto height = [&](const Vec& u) {
        return immersion_jet(s, {0, u}).value.dot(v);
    };
    ChartPoint plus, minus;
    bool have_plus = false, have_minus = false;
    for (int i = 0; i < 400 && !(have_plus && have_minus); ++i) {
        ChartPoint p = random_point(s, rng);
        p.chart = 0;
        double h = height(p.u);
        if (h > 1e-3 && !have_plus) {
            plus = p;
            have_plus = true;
        } else if (h < -1e-3 && !have_minus) {
            minus = p;
            have_minus = true;
        }
    }
    if (!(have_plus && have_minus))
        throw Error("could not bracket the zero level set");
    Vec lo = minus.u, hi = plus.u;
    for (int iter = 0; iter < 200; ++iter) {
        Vec mid = 0.5 * (lo + hi);
        double h = height(mid);
        if (std::abs(h) < tol) return {0, mid};
        if (h > 0)
            hi = mid;
        else
            lo = mid;
    }
    Vec mid = 0.5 * (lo + hi);
    return {0, mid};
}

} // namespace cmclab
