#include "cmclab/support.hpp"

#include <cmath>

namespace cmclab {

SupportSample support_sample(const Hypersurface& s, const ChartPoint& p, const Vec& v) {
    SurfaceJet jet = immersion_jet(s, p);
    NormalJet nu = unit_normal(s, p);
    SupportSample out;
    out.point = jet.value;
    out.normal = nu.value;
    out.height = jet.value.dot(v);
    out.normal_component = nu.value.dot(v);
    out.tangential = v - out.height * jet.value - out.normal_component * nu.value;
    return out;
}

GradientResiduals check_gradient_identities(const Hypersurface& s, const ChartPoint& p,
                                            const Vec& v) {
    SupportSample sample = support_sample(s, p, v);
    ChartFn height_fn = [&s, &p, &v](const Vec& u) {
        return immersion_jet(s, {p.chart, u}).value.dot(v);
    };
    ChartFn normal_fn = [&s, &p, &v](const Vec& u) {
        return unit_normal(s, {p.chart, u}).value.dot(v);
    };
    Vec grad_h = surface_gradient(s, p, height_fn);
    Vec grad_f = surface_gradient(s, p, normal_fn);

    // A(tangential) through the orthonormal-frame shape operator
    SurfaceJet jet = immersion_jet(s, p);
    CurvatureData cd = shape_operator(s, p);
    TangentFrame frame = tangent_frame(jet);
    Vec coords = frame.basis.transpose() * sample.tangential;
    Vec a_vt = frame.basis * (cd.shape * coords);

    GradientResiduals out;
    out.height = (grad_h - sample.tangential).norm();
    out.normal_component = (grad_f + a_vt).norm();
    return out;
}

LaplacianResiduals check_laplacian_identities(const Hypersurface& s, const ChartPoint& p,
                                              const Vec& v, double cmc_gate) {
    const int n = s.dim;
    SupportSample sample = support_sample(s, p, v);
    CurvatureData cd = shape_operator(s, p);
    ChartFn height_fn = [&s, &p, &v](const Vec& u) {
        return immersion_jet(s, {p.chart, u}).value.dot(v);
    };
    LaplacianResiduals out;
    out.mean_spread = mean_curvature_spread(s);
    out.cmc = out.mean_spread <= cmc_gate;
    double lap_h = laplace_beltrami(s, p, height_fn);
    // pointwise identity: trace(A) enters through the local mean curvature
    out.height = std::abs(lap_h + n * sample.height -
                          n * cd.mean_h * sample.normal_component);
    if (out.cmc) {
        ChartFn normal_fn = [&s, &p, &v](const Vec& u) {
            return unit_normal(s, {p.chart, u}).value.dot(v);
        };
        double lap_f = laplace_beltrami(s, p, normal_fn);
        out.normal_component = std::abs(lap_f + cd.norm_a_sq * sample.normal_component -
                                        n * cd.mean_h * sample.height);
    }
    return out;
}

ProportionalityResult proportionality_scan(const Hypersurface& s, const Vec& v,
                                           const std::vector<ChartPoint>& samples,
                                           double hold_tol) {
    if (samples.size() < 100)
        throw InsufficientSamples("proportionality scan needs at least 100 samples");
    double hf = 0.0, ff = 0.0;
    std::vector<std::pair<double, double>> vals;
    vals.reserve(samples.size());
    for (const ChartPoint& p : samples) {
        SupportSample sm = support_sample(s, p, v);
        vals.emplace_back(sm.height, sm.normal_component);
        hf += sm.height * sm.normal_component;
        ff += sm.normal_component * sm.normal_component;
    }
    if (ff < 1e-12)
        throw FIndeterminate("normal component vanishes identically on the sample");
    ProportionalityResult out;
    out.ratio = hf / ff;
    for (const auto& [h, f] : vals)
        out.max_residual = std::max(out.max_residual, std::abs(h - out.ratio * f));
    out.holds = out.max_residual < hold_tol;
    return out;
}

std::vector<SurfaceFn> support_family_functions(const Hypersurface& s, SupportFamily which) {
    std::vector<SurfaceFn> fns;
    for (int i = 0; i < s.ambient; ++i) {
        if (which == SupportFamily::Height) {
            fns.push_back([&s, i](const ChartPoint& p) {
                return immersion_jet(s, p).value[i];
            });
        } else {
            fns.push_back([&s, i](const ChartPoint& p) {
                return unit_normal(s, p).value[i];
            });
        }
    }
    return fns;
}

int gram_dimension(const Hypersurface& s, SupportFamily which, const QuadratureGrid& grid,
                   double rank_tol) {
    if (static_cast<int>(grid.nodes.size()) < 10 * s.ambient)
        throw InsufficientSamples("gram dimension needs at least 10(n+2) quadrature nodes");
    Mat g = gram_matrix(grid, support_family_functions(s, which));
    return numerical_rank(g, rank_tol);
}

} // namespace cmclab
