#include "cmclab/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "cmclab/support.hpp"

namespace cmclab {
namespace {

constexpr double kPi = 3.14159265358979323846;

long long binomial(int a, int b) {
    if (b < 0 || a < 0 || b > a) return 0;
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

long long harmonic_multiplicity(int m, int j) {
    return binomial(m + j, j) - binomial(m + j - 2, j - 2);
}

} // namespace

std::vector<SpectralLine> sphere_spectrum(int m, double radius, int j_max) {
    if (m < 1 || radius <= 0.0 || j_max < 0) throw BadSpec("bad sphere spectrum request");
    std::vector<SpectralLine> lines;
    lines.reserve(j_max + 1);
    for (int j = 0; j <= j_max; ++j)
        lines.push_back({j * (j + m - 1) / (radius * radius),
                         harmonic_multiplicity(m, j), j, 0});
    return lines;
}

CliffordSpectrum clifford_spectrum(const CliffordSpec& spec, int j_max) {
    if (spec.dim < 2 || spec.k < 1 || spec.k > spec.dim - 1 ||
        !(spec.r > 0 && spec.r < 1) || j_max < 0)
        throw BadSpec("bad clifford spectrum request");
    const double r2 = spec.r * spec.r;
    const double s2 = 1.0 - r2;
    auto first = sphere_spectrum(spec.k, spec.r, j_max);
    auto second = sphere_spectrum(spec.dim - spec.k, std::sqrt(s2), j_max);
    CliffordSpectrum out;
    out.threshold = clifford_norm_a_sq(spec.dim, spec.k, spec.r) + spec.dim;
    for (const auto& a : first)
        for (const auto& b : second)
            out.lines.push_back({a.mu + b.mu, a.mult * b.mult, a.p, b.p});
    std::sort(out.lines.begin(), out.lines.end(), [](const auto& a, const auto& b) {
        if (a.mu != b.mu) return a.mu < b.mu;
        if (a.p != b.p) return a.p < b.p;
        return a.q < b.q;
    });
    double omitted = std::min((j_max + 1) * (j_max + spec.k) / r2,
                              (j_max + 1) * (j_max + spec.dim - spec.k) / s2);
    out.truncation_ok = omitted > out.threshold + 10.0;
    return out;
}

int default_j_max(const CliffordSpec& spec) {
    for (int jm = 1; jm < 4096; ++jm) {
        const double r2 = spec.r * spec.r, s2 = 1.0 - r2;
        double omitted = std::min((jm + 1) * (jm + spec.k) / r2,
                                  (jm + 1) * (jm + spec.dim - spec.k) / s2);
        double threshold = clifford_norm_a_sq(spec.dim, spec.k, spec.r) + spec.dim;
        if (omitted > threshold + 10.0) return jm;
    }
    throw BadSpec("could not size the spectrum truncation");
}

std::vector<std::pair<double, long long>> merged_lines(
    const std::vector<SpectralLine>& lines, double tol) {
    std::vector<std::pair<double, long long>> merged;
    for (const auto& line : lines) {
        if (!merged.empty() && std::abs(line.mu - merged.back().first) <= tol)
            merged.back().second += line.mult;
        else
            merged.emplace_back(line.mu, line.mult);
    }
    return merged;
}

IndexReport index_counts(const CliffordSpec& spec, int j_max, double tie_tol) {
    if (j_max < 0) j_max = default_j_max(spec);
    CliffordSpectrum spectrum = clifford_spectrum(spec, j_max);
    IndexReport out;
    out.threshold = spectrum.threshold;
    out.truncation_ok = spectrum.truncation_ok;
    for (const auto& line : spectrum.lines) {
        if (line.p == 0 && line.q == 0) continue; // constants
        if (std::abs(line.mu - out.threshold) <= tie_tol)
            out.kernel.push_back(line);
        else if (line.mu < out.threshold)
            out.weak += line.mult;
    }
    out.strong = out.weak + 1; // the constant eigenfunction is admissible here
    return out;
}

IndexTestConstants index_test_constants(double mean_h, double norm_a_sq, int n) {
    IndexTestConstants out;
    out.disc = (norm_a_sq - n) * (norm_a_sq - n) +
               4.0 * n * n * mean_h * mean_h;
    double root = std::sqrt(out.disc);
    out.mu_plus = 0.5 * (n + norm_a_sq + root);
    out.mu_minus = 0.5 * (n + norm_a_sq - root);
    out.jac_plus = out.mu_plus - (norm_a_sq + n);
    out.jac_minus = out.mu_minus - (norm_a_sq + n);
    if (std::abs(mean_h) < 1e-12)
        throw MinimalCase("test-function constants need H != 0; use the height and "
                          "normal-component families instead");
    out.alpha_plus = (norm_a_sq - n + root) / (2.0 * n * mean_h);
    out.alpha_minus = (norm_a_sq - n - root) / (2.0 * n * mean_h);
    return out;
}

TestFunctionReport verify_test_functions(const Hypersurface& s, const Vec& v,
                                         int check_points, std::uint64_t seed) {
    if (mean_curvature_spread(s) > tol::cmc)
        throw NotCmc("test functions need constant mean curvature");
    if (shape_norm_spread(s) > tol::cmc)
        throw NotConstantShapeNorm("test functions need a constant shape norm");
    Lcg rng(seed);
    CurvatureData cd = shape_operator(s, random_point(s, rng));
    const int n = s.dim;
    TestFunctionReport out;

    QuadratureGrid grid = build_quadrature(s);
    auto height = [&](const ChartPoint& p) { return immersion_jet(s, p).value.dot(v); };
    auto normal = [&](const ChartPoint& p) { return unit_normal(s, p).value.dot(v); };

    auto run_member = [&](double alpha, double mu, bool& degenerate, double& residual,
                          double& mean) {
        auto member = [&, alpha](const ChartPoint& p) {
            return height(p) - alpha * normal(p);
        };
        double norm_sq = 0.0, integral = 0.0;
        for (int i = 0; i < static_cast<int>(grid.nodes.size()); ++i) {
            double val = member(grid.nodes[i]);
            norm_sq += grid.weights[i] * val * val;
            integral += grid.weights[i] * val;
        }
        mean = std::abs(integral);
        if (std::sqrt(norm_sq / grid.total()) < 1e-10) {
            degenerate = true;
            return;
        }
        Lcg local(seed + 1);
        for (int i = 0; i < check_points; ++i) {
            ChartPoint p = random_point(s, local);
            ChartFn fn = [&](const Vec& u) { return member({p.chart, u}); };
            double lap = laplace_beltrami(s, p, fn);
            residual = std::max(residual, std::abs(lap + mu * member(p)));
        }
    };

    if (std::abs(cd.mean_h) < 1e-12) {
        out.minimal = true;
        Lcg local(seed + 1);
        for (int i = 0; i < check_points; ++i) {
            ChartPoint p = random_point(s, local);
            ChartFn hf = [&](const Vec& u) { return height({p.chart, u}); };
            ChartFn nf = [&](const Vec& u) { return normal({p.chart, u}); };
            out.residual_height = std::max(
                out.residual_height, std::abs(laplace_beltrami(s, p, hf) + n * height(p)));
            out.residual_normal = std::max(
                out.residual_normal,
                std::abs(laplace_beltrami(s, p, nf) + cd.norm_a_sq * normal(p)));
        }
        return out;
    }
    IndexTestConstants constants = index_test_constants(cd.mean_h, cd.norm_a_sq, n);
    run_member(constants.alpha_plus, constants.mu_plus, out.degenerate_plus,
               out.residual_plus, out.mean_plus);
    run_member(constants.alpha_minus, constants.mu_minus, out.degenerate_minus,
               out.residual_minus, out.mean_minus);
    return out;
}

DimensionBoundReport dimension_bound_report(const Hypersurface& s) {
    if (mean_curvature_spread(s) > tol::cmc)
        throw NotCmc("dimension bound needs constant mean curvature");
    if (shape_norm_spread(s) > tol::cmc)
        throw NotConstantShapeNorm("dimension bound needs a constant shape norm");
    Lcg rng(41);
    CurvatureData cd = shape_operator(s, random_point(s, rng));
    const int n = s.dim;
    QuadratureGrid grid = build_quadrature(s);
    DimensionBoundReport out;

    std::vector<SurfaceFn> fam_plus, fam_minus;
    if (std::abs(cd.mean_h) < 1e-12) {
        out.minimal = true;
        out.eigen_plus = n;               // heights
        out.eigen_minus = cd.norm_a_sq;   // normal components
        fam_plus = support_family_functions(s, SupportFamily::Height);
        fam_minus = support_family_functions(s, SupportFamily::NormalComponent);
    } else {
        IndexTestConstants constants = index_test_constants(cd.mean_h, cd.norm_a_sq, n);
        out.eigen_plus = constants.mu_plus;
        out.eigen_minus = constants.mu_minus;
        auto heights = support_family_functions(s, SupportFamily::Height);
        auto normals = support_family_functions(s, SupportFamily::NormalComponent);
        for (int i = 0; i < s.ambient; ++i) {
            double ap = constants.alpha_plus, am = constants.alpha_minus;
            auto h = heights[i];
            auto f = normals[i];
            fam_plus.push_back(
                [h, f, ap](const ChartPoint& p) { return h(p) - ap * f(p); });
            fam_minus.push_back(
                [h, f, am](const ChartPoint& p) { return h(p) - am * f(p); });
        }
    }
    out.distinct_eigenvalues = std::abs(out.eigen_plus - out.eigen_minus) > 1e-9;

    Mat gp = gram_matrix(grid, fam_plus);
    Mat gm = gram_matrix(grid, fam_minus);
    Mat gc = cross_gram_matrix(grid, fam_plus, fam_minus);
    double scale_p = gp.diagonal().maxCoeff();
    double scale_m = gm.diagonal().maxCoeff();
    for (int i = 0; i < s.ambient; ++i) {
        if (gp(i, i) < 1e-20 * scale_p) out.degenerate_plus.push_back(i);
        if (gm(i, i) < 1e-20 * scale_m) out.degenerate_minus.push_back(i);
    }
    out.rank_plus = numerical_rank(gp);
    out.rank_minus = numerical_rank(gm);
    out.bound = out.rank_plus + out.rank_minus;
    out.cross_gram = gc.norm() / std::sqrt(std::max(gp.norm() * gm.norm(), 1e-300));
    return out;
}

MeshComparison mesh_laplacian_crosscheck(const CliffordSpec& spec, int grid, int lines) {
    if (spec.dim != 2 || spec.k != 1)
        throw BadSpec("mesh cross-check covers the two-dimensional product only");
    if (grid < 16) throw BadGrid("grid too coarse for the stencil cross-check");
    const double r2 = spec.r * spec.r, s2 = 1.0 - r2;

    // 1D periodic second-difference eigenvalues, honestly via a dense solve;
    // the five-point operator is their Kronecker sum, so the 2D eigenvalues
    // are all pairwise sums (unit tests verify this against a direct 2D
    // solve on a small grid).
    const double h = 2.0 * kPi / grid;
    Mat ring = Mat::Zero(grid, grid);
    for (int i = 0; i < grid; ++i) {
        ring(i, i) = 2.0 / (h * h);
        ring(i, (i + 1) % grid) -= 1.0 / (h * h);
        ring(i, (i + grid - 1) % grid) -= 1.0 / (h * h);
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(ring);
    Vec ring_ev = es.eigenvalues();

    std::vector<double> discrete;
    discrete.reserve(grid * grid);
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            discrete.push_back(ring_ev[i] / r2 + ring_ev[j] / s2);
    std::sort(discrete.begin(), discrete.end());

    // analytic Fourier lines p^2/r^2 + q^2/(1-r^2) with (p,q) signed modes
    std::vector<std::pair<double, long long>> analytic;
    int cap = 2 * lines + 4;
    for (int p = 0; p <= cap; ++p)
        for (int q = 0; q <= cap; ++q) {
            double mu = p * p / r2 + q * q / s2;
            long long mult = (p == 0 ? 1 : 2) * (q == 0 ? 1 : 2);
            analytic.emplace_back(mu, mult);
        }
    std::sort(analytic.begin(), analytic.end());
    std::vector<std::pair<double, long long>> merged;
    for (const auto& [mu, mult] : analytic) {
        if (!merged.empty() && std::abs(mu - merged.back().first) < 1e-9)
            merged.back().second += mult;
        else
            merged.emplace_back(mu, mult);
    }

    MeshComparison out;
    out.grid = grid;
    std::size_t pos = 1; // skip the zero mode on both sides
    for (std::size_t li = 1; li < merged.size() && static_cast<int>(out.rows.size()) < lines;
         ++li) {
        auto [mu, mult] = merged[li];
        double worst = 0.0;
        for (long long m = 0; m < mult; ++m, ++pos) {
            if (pos >= discrete.size()) throw BadGrid("grid smaller than requested lines");
            worst = std::max(worst, std::abs(discrete[pos] - mu) / mu);
        }
        out.rows.push_back({mu, mult, worst});
        out.fitted_c = std::max(out.fitted_c, worst * grid * grid);
    }
    return out;
}

} // namespace cmclab
