#pragma once
#include <cmath>

#include "cmclab/geometry.hpp"

namespace cmclab {

/// Totally umbilical sphere: the slice <x, axis> = height of S^{n+1}.
struct UmbilicalSpec {
    int dim = 2;       // hypersurface dimension n
    Vec axis;          // unit vector in R^{n+2}; empty means e1
    double height = 0.5; // |height| < 1 strictly
};

/// Product of round spheres S^k(r) x S^{n-k}(sqrt(1-r^2)) inside S^{n+1}.
struct CliffordSpec {
    int dim = 2;
    int k = 1;
    double r = 0.6;
};

/// Perturbed slice of S^n used as the base of the product counterexample:
/// colatitude profile rho(t) = rho0 + eps cos(freq t). Valid only when all
/// principal curvatures stay strictly inside (1, 2).
struct BaseSurfaceSpec {
    int dim = 2; // the n of M = S^1 x N; N itself has dimension n-1 in S^n
    double rho0 = std::acos(0.8);
    double eps = 0.02;
    int freq = 2;
};

struct CounterexampleSpec {
    BaseSurfaceSpec base;
};

Hypersurface make_umbilical(const UmbilicalSpec& spec);
Hypersurface make_clifford(const CliffordSpec& spec);
Hypersurface make_base_surface(const BaseSurfaceSpec& spec);
Hypersurface make_counterexample(const CounterexampleSpec& spec);

// Closed forms for the canonical families; these double as test oracles.
inline double umbilical_kappa(double c) { return c / std::sqrt(1.0 - c * c); }
inline double umbilical_norm_a_sq(int n, double c) { return n * c * c / (1.0 - c * c); }
inline double clifford_kappa_low(double r) { return -std::sqrt(1.0 - r * r) / r; }
inline double clifford_kappa_high(double r) { return r / std::sqrt(1.0 - r * r); }
inline double clifford_mean(int n, int k, double r) {
    return (n * r * r - k) / (n * r * std::sqrt(1.0 - r * r));
}
inline double clifford_norm_a_sq(int n, int k, double r) {
    return k / (r * r) + (n - k) / (1.0 - r * r) - n;
}

} // namespace cmclab
