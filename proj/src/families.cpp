#include "cmclab/families.hpp"

#include <cmath>

namespace cmclab {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCurvatureMargin = 0.01; // the (1,2) gate is enforced at (1.01, 1.99)

std::vector<double> to_std(const Vec& u) {
    return std::vector<double>(u.data(), u.data() + u.size());
}

Vec to_vec(const std::vector<double>& v) {
    return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<TJet> seed_vars(int nvars, const Vec& u, int offset = 0) {
    std::vector<TJet> vars;
    vars.reserve(u.size() - offset);
    for (int i = offset; i < u.size(); ++i)
        vars.push_back(TJet::variable(nvars, i, u[i]));
    return vars;
}

Vec values_of(const std::vector<TJet>& comps) {
    Vec v(static_cast<Eigen::Index>(comps.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = comps[i].value();
    return v;
}

// Spherical-coordinate domain of an m-sphere chart: m-1 colatitudes in
// (0, pi) and one periodic angle.
void append_sphere_domain(std::vector<double>& lo, std::vector<double>& hi,
                          std::vector<std::uint8_t>& periodic, int m) {
    for (int i = 0; i < m - 1; ++i) {
        lo.push_back(0.0);
        hi.push_back(kPi);
        periodic.push_back(0);
    }
    lo.push_back(0.0);
    hi.push_back(2.0 * kPi);
    periodic.push_back(1);
}

// ---- umbilical spheres ----

struct UmbilicalData {
    int n = 0;
    double c = 0.0, s = 1.0;
    Vec axis;
    Mat basis; // (n+2) x (n+1), orthonormal complement of axis
};

template <class T>
std::vector<T> umbilical_point(const UmbilicalData& d, const std::vector<T>& angles) {
    std::vector<T> y = sphere_point(angles);
    std::vector<T> phi;
    phi.reserve(d.n + 2);
    for (int a = 0; a < d.n + 2; ++a) {
        T acc = y[0] * (d.s * d.basis(a, 0));
        for (int j = 1; j <= d.n; ++j) acc += y[j] * (d.s * d.basis(a, j));
        acc += d.c * d.axis[a];
        phi.push_back(acc);
    }
    return phi;
}

// ---- Clifford products ----

struct CliffordData {
    int n = 0, k = 0;
    double r = 0.0, rho = 0.0;
};

template <class T>
std::vector<T> clifford_point(const CliffordData& d, const std::vector<T>& angles) {
    std::vector<T> a1(angles.begin(), angles.begin() + d.k);
    std::vector<T> a2(angles.begin() + d.k, angles.end());
    std::vector<T> y1 = sphere_point(a1);
    std::vector<T> y2 = sphere_point(a2);
    std::vector<T> phi;
    phi.reserve(d.n + 2);
    for (const auto& y : y1) phi.push_back(y * d.r);
    for (const auto& y : y2) phi.push_back(y * d.rho);
    return phi;
}

template <class T>
std::vector<T> clifford_normal(const CliffordData& d, const std::vector<T>& angles) {
    std::vector<T> a1(angles.begin(), angles.begin() + d.k);
    std::vector<T> a2(angles.begin() + d.k, angles.end());
    std::vector<T> y1 = sphere_point(a1);
    std::vector<T> y2 = sphere_point(a2);
    std::vector<T> nu;
    nu.reserve(d.n + 2);
    for (const auto& y : y1) nu.push_back(y * d.rho);
    for (const auto& y : y2) nu.push_back(y * (-d.r));
    return nu;
}

// ---- perturbed base slice N of S^n ----

struct BaseData {
    int n = 2; // N has dimension n-1, ambient R^{n+1}
    double rho0 = 0.0, eps = 0.0;
    int freq = 0;
    double sign = 1.0;
};

template <class T>
std::vector<T> base_point(const BaseData& d, const std::vector<T>& angles) {
    using std::cos;
    using std::sin;
    T rho = d.eps * cos(angles[0] * static_cast<double>(d.freq)) + d.rho0;
    std::vector<T> y = sphere_point(angles); // S^{n-1} chart in the e1-complement
    T cr = cos(rho), sr = sin(rho);
    std::vector<T> x;
    x.reserve(d.n + 1);
    x.push_back(cr);
    for (const auto& comp : y) x.push_back(sr * comp);
    return x;
}

// Position and unit normal of N as jets (normal valid to second order).
// var_idx names which jet variables carry the chart angles, so the same
// code serves the standalone chart and the product immersion.
std::pair<std::vector<TJet>, std::vector<TJet>> base_point_and_normal(
    const BaseData& d, const std::vector<TJet>& angles, const std::vector<int>& var_idx) {
    std::vector<TJet> x = base_point(d, angles);
    std::vector<std::vector<TJet>> tangents;
    for (int vi : var_idx) {
        std::vector<TJet> t;
        t.reserve(x.size());
        for (const auto& comp : x) t.push_back(comp.differentiate(vi));
        tangents.push_back(std::move(t));
    }
    std::vector<TJet> nu_hat = d.n == 2 ? cross3(x, tangents[0])
                                        : cross4(x, tangents[0], tangents[1]);
    std::vector<TJet> nu = normalized(nu_hat);
    for (auto& comp : nu) comp *= d.sign;
    return {std::move(x), std::move(nu)};
}

std::vector<int> base_var_indices(int n, int offset) {
    std::vector<int> idx;
    for (int i = 0; i < n - 1; ++i) idx.push_back(offset + i);
    return idx;
}

// Orientation constant: the normal keeps a positive first component on the
// chart (matching the slice normal (e1 - c x)/sqrt(1-c^2) at eps = 0).
double base_sign(const BaseData& d) {
    Vec center(d.n - 1);
    center[0] = d.n == 2 ? kPi : kPi / 2.0;
    if (d.n == 3) center[1] = kPi;
    BaseData unsigned_d = d;
    unsigned_d.sign = 1.0;
    auto [x, nu] =
        base_point_and_normal(unsigned_d, seed_vars(d.n - 1, center), base_var_indices(d.n, 0));
    return nu[0].value() > 0 ? 1.0 : -1.0;
}

Hypersurface assemble_base(const BaseData& d) {
    Hypersurface s;
    s.dim = d.n - 1;
    s.ambient = d.n + 1;
    s.family = "base-surface";
    Chart c;
    std::vector<double> lo, hi;
    std::vector<std::uint8_t> periodic;
    append_sphere_domain(lo, hi, periodic, d.n - 1);
    c.lo = to_vec(lo);
    c.hi = to_vec(hi);
    c.periodic = periodic;
    const int nv = d.n - 1;
    c.position = [d](const Vec& u) {
        return to_vec(base_point(d, to_std(u)));
    };
    c.jet = [d, nv](const Vec& u) {
        return jet_from_taylor(base_point(d, seed_vars(nv, u)), nv);
    };
    c.normal_jet = [d, nv](const Vec& u) {
        auto [x, nu] = base_point_and_normal(d, seed_vars(nv, u), base_var_indices(d.n, 0));
        return normal_jet_from_taylor(nu, nv);
    };
    s.charts.push_back(std::move(c));
    return s;
}

} // namespace

Hypersurface make_umbilical(const UmbilicalSpec& spec) {
    const int n = spec.dim;
    if (n < 1 || n > 5) throw BadSpec("umbilical dimension out of desk-scale range");
    if (!(std::abs(spec.height) < 1.0)) throw BadSpec("umbilical height must satisfy |c| < 1");
    UmbilicalData d;
    d.n = n;
    d.c = spec.height;
    d.s = std::sqrt(1.0 - spec.height * spec.height);
    d.axis = spec.axis.size() ? spec.axis : Vec::Unit(n + 2, 0);
    if (d.axis.size() != n + 2) throw BadSpec("axis dimension mismatch");
    if (std::abs(d.axis.norm() - 1.0) > 1e-12) throw BadSpec("axis must be a unit vector");
    Eigen::HouseholderQR<Mat> qr(d.axis);
    Mat Q = qr.householderQ();
    if (Q.col(0).dot(d.axis) < 0) Q = -Q;
    d.basis = Q.rightCols(n + 1);

    Hypersurface s;
    s.dim = n;
    s.ambient = n + 2;
    s.family = "umbilical";
    s.metadata["height"] = d.c;
    Chart c;
    std::vector<double> lo, hi;
    std::vector<std::uint8_t> periodic;
    append_sphere_domain(lo, hi, periodic, n);
    c.lo = to_vec(lo);
    c.hi = to_vec(hi);
    c.periodic = periodic;
    c.position = [d](const Vec& u) { return to_vec(umbilical_point(d, to_std(u))); };
    c.jet = [d, n](const Vec& u) {
        return jet_from_taylor(umbilical_point(d, seed_vars(n, u)), n);
    };
    c.normal_jet = [d, n](const Vec& u) {
        std::vector<TJet> phi = umbilical_point(d, seed_vars(n, u));
        std::vector<TJet> nu;
        nu.reserve(phi.size());
        for (int a = 0; a < n + 2; ++a)
            nu.push_back((d.axis[a] - d.c * phi[a]) * (1.0 / d.s));
        return normal_jet_from_taylor(nu, n);
    };
    s.charts.push_back(std::move(c));
    return s;
}

Hypersurface make_clifford(const CliffordSpec& spec) {
    const int n = spec.dim;
    if (n < 2 || n > 5) throw BadSpec("clifford dimension out of desk-scale range");
    if (spec.k < 1 || spec.k > n - 1) throw BadSpec("clifford factor split k out of range");
    if (!(spec.r > 0.0 && spec.r < 1.0)) throw BadSpec("clifford radius must be in (0,1)");
    CliffordData d;
    d.n = n;
    d.k = spec.k;
    d.r = spec.r;
    d.rho = std::sqrt(1.0 - spec.r * spec.r);

    Hypersurface s;
    s.dim = n;
    s.ambient = n + 2;
    s.family = "clifford";
    s.metadata["r"] = d.r;
    s.metadata["k"] = d.k;
    Chart c;
    std::vector<double> lo, hi;
    std::vector<std::uint8_t> periodic;
    append_sphere_domain(lo, hi, periodic, d.k);
    append_sphere_domain(lo, hi, periodic, n - d.k);
    c.lo = to_vec(lo);
    c.hi = to_vec(hi);
    c.periodic = periodic;
    c.position = [d](const Vec& u) { return to_vec(clifford_point(d, to_std(u))); };
    c.jet = [d, n](const Vec& u) {
        return jet_from_taylor(clifford_point(d, seed_vars(n, u)), n);
    };
    c.normal_jet = [d, n](const Vec& u) {
        return normal_jet_from_taylor(clifford_normal(d, seed_vars(n, u)), n);
    };
    s.charts.push_back(std::move(c));
    return s;
}

Hypersurface make_base_surface(const BaseSurfaceSpec& spec) {
    if (spec.dim != 2 && spec.dim != 3)
        throw BadSpec("base surface supports dim 2 or 3 only");
    if (spec.eps < 0.0 || spec.freq < 0) throw BadSpec("bad perturbation parameters");
    if (!(spec.rho0 - spec.eps > 0.05 && spec.rho0 + spec.eps < kPi - 0.05))
        throw BadSpec("colatitude profile leaves (0, pi)");
    BaseData d;
    d.n = spec.dim;
    d.rho0 = spec.rho0;
    d.eps = spec.eps;
    d.freq = spec.freq;
    d.sign = 1.0;
    d.sign = base_sign(d);
    Hypersurface s = assemble_base(d);
    s.metadata["rho0"] = d.rho0;
    s.metadata["eps"] = d.eps;
    s.metadata["freq"] = d.freq;

    // principal curvatures must stay strictly inside the (1, 2) window
    double lo = 1e300, hi = -1e300;
    auto visit = [&](const Vec& u) {
        CurvatureData cd = shape_operator(s, {0, u});
        lo = std::min(lo, cd.kappas.minCoeff());
        hi = std::max(hi, cd.kappas.maxCoeff());
    };
    if (d.n == 2) {
        const int m = 1024;
        for (int i = 0; i < m; ++i) {
            Vec u(1);
            u[0] = 2.0 * kPi * (i + 0.5) / m;
            visit(u);
        }
    } else {
        const int m = 64;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                Vec u(2);
                u[0] = 1e-3 + (kPi - 2e-3) * (i + 0.5) / m;
                u[1] = 2.0 * kPi * (j + 0.5) / m;
                visit(u);
            }
    }
    if (!(lo > 1.0 + kCurvatureMargin && hi < 2.0 - kCurvatureMargin))
        throw CurvatureOutOfBounds("base curvatures [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "] leave (1.01, 1.99)");
    s.metadata["kappa_min"] = lo;
    s.metadata["kappa_max"] = hi;
    return s;
}

Hypersurface make_counterexample(const CounterexampleSpec& spec) {
    Hypersurface base = make_base_surface(spec.base); // validates the curvature window
    const int n = spec.base.dim;
    BaseData d;
    d.n = n;
    d.rho0 = spec.base.rho0;
    d.eps = spec.base.eps;
    d.freq = spec.base.freq;
    d.sign = 1.0;
    d.sign = base_sign(d);

    const double root2 = std::sqrt(2.0);
    const int nv = n; // chart variables: s plus the n-1 base angles
    auto evaluate = [d, root2, nv](const Vec& u, bool normal) {
        TJet sj = TJet::variable(nv, 0, u[0]);
        std::vector<TJet> angles = seed_vars(nv, u, 1);
        auto [x, nu] = base_point_and_normal(d, angles, base_var_indices(d.n, 1));
        TJet arg = sj * root2;
        TJet sn = sin(arg), cs = cos(arg);
        std::vector<TJet> comps;
        comps.reserve(d.n + 2);
        comps.push_back(sn * (1.0 / root2));
        for (int a = 0; a <= d.n; ++a) {
            TJet plus = (x[a] + nu[a]) * 0.5;
            TJet minus = (x[a] - nu[a]) * 0.5;
            comps.push_back(normal ? cs * plus - minus : cs * plus + minus);
        }
        return comps;
    };

    Hypersurface s;
    s.dim = n;
    s.ambient = n + 2;
    s.family = "counterexample";
    for (const auto& [key, val] : base.metadata) s.metadata["base_" + key] = val;

    Chart c;
    std::vector<double> lo{-2.2}, hi{2.2};
    std::vector<std::uint8_t> periodic{0};
    const Chart& bc = base.charts[0];
    for (int i = 0; i < bc.lo.size(); ++i) {
        lo.push_back(bc.lo[i]);
        hi.push_back(bc.hi[i]);
        periodic.push_back(bc.periodic[i]);
    }
    c.lo = to_vec(lo);
    c.hi = to_vec(hi);
    c.periodic = periodic;
    c.position = [evaluate](const Vec& u) { return values_of(evaluate(u, false)); };
    c.jet = [evaluate, nv](const Vec& u) {
        return jet_from_taylor(evaluate(u, false), nv);
    };
    c.normal_jet = [evaluate, nv](const Vec& u) {
        return normal_jet_from_taylor(evaluate(u, true), nv);
    };
    s.charts.push_back(std::move(c));

    // nondegeneracy of d(phi): the tangential stretch factor
    // (1 - kappa) cos(sqrt(2) s) + 1 + kappa is minimized over s at cos = 1
    // for kappa in (1, 2), where it equals 2; record the sampled minimum.
    double kmin = base.metadata.at("kappa_min");
    double kmax = base.metadata.at("kappa_max");
    double factor_min = std::min({2.0, 2.0 * kmin, 2.0 * kmax});
    if (factor_min < tol::rank)
        throw DegenerateImmersion("product immersion degenerates");
    s.metadata["immersion_factor_min"] = factor_min;
    return s;
}

} // namespace cmclab
