#pragma once
#include <utility>
#include <vector>

#include "cmclab/geometry.hpp"

namespace cmclab {

/// Gauss-Legendre nodes and weights on [a, b] (Golub-Welsch).
std::pair<Vec, Vec> gauss_legendre(int n, double a, double b);

/// Surface quadrature: tensor grids per chart, trapezoidal in periodic
/// directions (spectrally accurate for smooth periodic integrands),
/// Gauss-Legendre in the others, weighted by the metric volume element.
struct QuadratureGrid {
    std::vector<ChartPoint> nodes;
    Vec weights;
    double total() const { return weights.sum(); }
};

QuadratureGrid build_quadrature(const Hypersurface& s, int periodic_pts = 48,
                                int aperiodic_pts = 32);

/// L2 inner products of two function families under the grid.
using SurfaceFn = std::function<double(const ChartPoint&)>;
Mat gram_matrix(const QuadratureGrid& grid, const std::vector<SurfaceFn>& fns);
Mat cross_gram_matrix(const QuadratureGrid& grid, const std::vector<SurfaceFn>& a,
                      const std::vector<SurfaceFn>& b);

/// Count of singular values above rel_tol * sigma_max.
int numerical_rank(const Mat& m, double rel_tol = 1e-8);

} // namespace cmclab
