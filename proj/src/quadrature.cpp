#include "cmclab/quadrature.hpp"

#include <cmath>

namespace cmclab {

std::pair<Vec, Vec> gauss_legendre(int n, double a, double b) {
    // Jacobi matrix of the Legendre recurrence; nodes are its eigenvalues,
    // weights come from the first eigenvector components.
    Mat J = Mat::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        double beta = i / std::sqrt(4.0 * i * i - 1.0);
        J(i, i - 1) = J(i - 1, i) = beta;
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(J);
    Vec x(n), w(n);
    for (int i = 0; i < n; ++i) {
        double xi = es.eigenvalues()[i];
        double v0 = es.eigenvectors()(0, i);
        x[i] = a + 0.5 * (b - a) * (xi + 1.0);
        w[i] = (b - a) * v0 * v0;
    }
    return {x, w};
}

QuadratureGrid build_quadrature(const Hypersurface& s, int periodic_pts,
                                int aperiodic_pts) {
    QuadratureGrid grid;
    std::vector<double> weights;
    for (int ci = 0; ci < static_cast<int>(s.charts.size()); ++ci) {
        const Chart& c = s.charts[ci];
        const int d = static_cast<int>(c.lo.size());
        std::vector<Vec> xs(d), ws(d);
        for (int i = 0; i < d; ++i) {
            if (c.periodic[i]) {
                int m = periodic_pts;
                double step = (c.hi[i] - c.lo[i]) / m;
                xs[i].resize(m);
                ws[i] = Vec::Constant(m, step);
                for (int k = 0; k < m; ++k) xs[i][k] = c.lo[i] + k * step;
            } else {
                auto [x, w] = gauss_legendre(aperiodic_pts, c.lo[i], c.hi[i]);
                xs[i] = x;
                ws[i] = w;
            }
        }
        std::vector<int> idx(d, 0);
        for (;;) {
            Vec u(d);
            double w = 1.0;
            for (int i = 0; i < d; ++i) {
                u[i] = xs[i][idx[i]];
                w *= ws[i][idx[i]];
            }
            ChartPoint p{ci, u};
            SurfaceJet jet = immersion_jet(s, p);
            double vol = std::sqrt(first_fundamental_form(jet).determinant());
            grid.nodes.push_back(p);
            weights.push_back(w * vol);
            int i = 0;
            while (i < d && ++idx[i] == xs[i].size()) idx[i++] = 0;
            if (i == d) break;
        }
    }
    grid.weights = Eigen::Map<Vec>(weights.data(), weights.size());
    return grid;
}

Mat gram_matrix(const QuadratureGrid& grid, const std::vector<SurfaceFn>& fns) {
    return cross_gram_matrix(grid, fns, fns);
}

Mat cross_gram_matrix(const QuadratureGrid& grid, const std::vector<SurfaceFn>& a,
                      const std::vector<SurfaceFn>& b) {
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    const int m = static_cast<int>(grid.nodes.size());
    Mat A(m, na), B(m, nb);
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < na; ++i) A(k, i) = a[i](grid.nodes[k]);
        for (int j = 0; j < nb; ++j) B(k, j) = b[j](grid.nodes[k]);
    }
    return A.transpose() * grid.weights.asDiagonal() * B;
}

int numerical_rank(const Mat& m, double rel_tol) {
    Eigen::JacobiSVD<Mat> svd(m);
    Vec sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] <= 0.0) return 0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > rel_tol * sv[0]) ++rank;
    return rank;
}

} // namespace cmclab
