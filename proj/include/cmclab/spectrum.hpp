#pragma once
#include <optional>

#include "cmclab/families.hpp"
#include "cmclab/geometry.hpp"
#include "cmclab/quadrature.hpp"

namespace cmclab {

/// One Laplace eigenvalue line, convention Delta u + mu u = 0 (so mu >= 0).
/// For product spectra (p, q) are the factor harmonic degrees; for a single
/// sphere the degree sits in p and q is zero.
struct SpectralLine {
    double mu = 0.0;
    long long mult = 0;
    int p = 0;
    int q = 0;
};

/// Laplace spectrum of the round m-sphere of the given radius, degrees
/// 0..j_max: mu = j(j+m-1)/radius^2 with the usual harmonic multiplicities.
std::vector<SpectralLine> sphere_spectrum(int m, double radius, int j_max);

struct CliffordSpectrum {
    std::vector<SpectralLine> lines; // ascending in mu
    double threshold = 0.0;          // |A|^2 + n
    bool truncation_ok = false;      // smallest omitted line clears threshold + margin
};
CliffordSpectrum clifford_spectrum(const CliffordSpec& spec, int j_max);

/// Smallest per-factor degree cap whose omitted lines all exceed
/// threshold + 10.
int default_j_max(const CliffordSpec& spec);

/// Merge lines with equal eigenvalues (within tol) into (mu, multiplicity).
std::vector<std::pair<double, long long>> merged_lines(
    const std::vector<SpectralLine>& lines, double tol = 1e-9);

/// Stability index counts from the analytic spectrum. Lines at the
/// threshold within the tie tolerance are reported, never counted.
struct IndexReport {
    long long weak = 0;
    long long strong = 0;
    std::vector<SpectralLine> kernel;
    double threshold = 0.0;
    bool truncation_ok = false;
};
IndexReport index_counts(const CliffordSpec& spec, int j_max = -1,
                         double tie_tol = tol::tie);

/// The test-function constants for the nonminimal case: u = h - alpha f with
/// the two admissible alphas, their Laplace eigenvalues mu, and the shifted
/// stability eigenvalues jac = mu - (|A|^2 + n).
struct IndexTestConstants {
    double alpha_plus = 0.0, alpha_minus = 0.0;
    double mu_plus = 0.0, mu_minus = 0.0;
    double jac_plus = 0.0, jac_minus = 0.0;
    double disc = 0.0; // (|A|^2 - n)^2 + 4 n^2 H^2
};
IndexTestConstants index_test_constants(double mean_h, double norm_a_sq, int n);

/// Numerical verification that the test functions are Laplace
/// eigenfunctions with zero mean. Identically vanishing members (the
/// factor-aligned degeneracies) are flagged and skipped.
struct TestFunctionReport {
    bool minimal = false;
    bool degenerate_plus = false, degenerate_minus = false;
    double residual_plus = 0.0, residual_minus = 0.0; // |Delta u + mu u| at samples
    double mean_plus = 0.0, mean_minus = 0.0;         // |integral of u|
    // minimal branch: height/normal-component eigenfunction residuals
    double residual_height = 0.0, residual_normal = 0.0;
};
TestFunctionReport verify_test_functions(const Hypersurface& s, const Vec& v,
                                         int check_points = 12,
                                         std::uint64_t seed = 23);

/// Gram ranks of the two test-function families (or of the height and
/// normal-component families when H = 0) and the resulting dimension bound.
struct DimensionBoundReport {
    bool minimal = false;
    int rank_plus = 0, rank_minus = 0;
    int bound = 0;
    std::vector<int> degenerate_plus, degenerate_minus;
    double cross_gram = 0.0; // normalized cross-family Gram norm
    double eigen_plus = 0.0, eigen_minus = 0.0;
    bool distinct_eigenvalues = false;
};
DimensionBoundReport dimension_bound_report(const Hypersurface& s);

/// Periodic five-point stencil eigenvalues for the flat torus metric of a
/// two-dimensional Clifford product, compared with the analytic lines.
struct MeshComparison {
    int grid = 0;
    struct Row {
        double mu = 0.0;
        long long mult = 0;
        double rel_err = 0.0;
    };
    std::vector<Row> rows; // first nonzero analytic lines
    double fitted_c = 0.0; // max rel_err * grid^2
};
MeshComparison mesh_laplacian_crosscheck(const CliffordSpec& spec, int grid,
                                         int lines = 12);

} // namespace cmclab
