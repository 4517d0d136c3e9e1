#include "cmclab/geometry.hpp"

#include <cmath>

namespace cmclab {
namespace {

const Chart& chart_of(const Hypersurface& s, const ChartPoint& p) {
    if (p.chart < 0 || p.chart >= static_cast<int>(s.charts.size()))
        throw OutOfDomain("chart index out of range");
    return s.charts[p.chart];
}

void check_domain(const Chart& c, const Vec& u) {
    if (u.size() != c.lo.size()) throw OutOfDomain("chart point dimension mismatch");
    for (int i = 0; i < u.size(); ++i) {
        if (c.periodic[i]) continue;
        if (!(u[i] > c.lo[i] && u[i] < c.hi[i]))
            throw OutOfDomain("chart point outside open domain");
    }
}

SurfaceJet finite_difference_jet(const Chart& c, const Vec& u) {
    // first derivatives at the configured step; second differences use a
    // larger step (the rounding floor of a second difference is 4 eps / h^2,
    // so 1e-4 sits near the double-precision optimum and keeps the fallback
    // within the 1e-6 agreement gate)
    const double h = tol::fd_step;
    const double h2 = 1e-4;
    const int n = static_cast<int>(u.size());
    SurfaceJet jet;
    jet.analytic = false;
    jet.value = c.position(u);
    jet.d1.resize(n);
    jet.d2.assign(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i) {
        Vec up = u, um = u;
        up[i] += h;
        um[i] -= h;
        jet.d1[i] = (c.position(up) - c.position(um)) / (2.0 * h);
        up[i] = u[i] + h2;
        um[i] = u[i] - h2;
        jet.d2[i][i] = (c.position(up) - 2.0 * jet.value + c.position(um)) / (h2 * h2);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec upp = u, upm = u, ump = u, umm = u;
            upp[i] += h2; upp[j] += h2;
            upm[i] += h2; upm[j] -= h2;
            ump[i] -= h2; ump[j] += h2;
            umm[i] -= h2; umm[j] -= h2;
            Vec mixed = (c.position(upp) - c.position(upm) - c.position(ump) +
                         c.position(umm)) /
                        (4.0 * h2 * h2);
            jet.d2[i][j] = mixed;
            jet.d2[j][i] = mixed;
        }
    return jet;
}

void validate_jet(const SurfaceJet& jet, double geo) {
    if (std::abs(jet.value.norm() - 1.0) > geo)
        throw Error("immersion point is off the unit sphere");
    for (const Vec& t : jet.d1)
        if (std::abs(t.dot(jet.value)) > geo * std::max(1.0, t.norm()))
            throw Error("chart derivative is not tangent to the sphere");
}

} // namespace

bool Hypersurface::analytic() const {
    for (const Chart& c : charts)
        if (!c.jet) return false;
    return true;
}

Hypersurface Hypersurface::without_analytic_jets() const {
    Hypersurface copy = *this;
    for (Chart& c : copy.charts) {
        c.jet = nullptr;
        c.normal_jet = nullptr;
    }
    // align the orientation flag with the family's normal convention so the
    // fallback complement measures curvature with the same sign
    if (!charts.empty() && charts[0].normal_jet) {
        Vec center = 0.5 * (charts[0].lo + charts[0].hi);
        ChartPoint p{0, center};
        SurfaceJet jet = immersion_jet(*this, p);
        Vec formula = charts[0].normal_jet(center).value;
        copy.orientation = complement_normal(jet, 1.0).dot(formula) > 0 ? 1.0 : -1.0;
    }
    return copy;
}

SurfaceJet immersion_jet(const Hypersurface& s, const ChartPoint& p) {
    const Chart& c = chart_of(s, p);
    check_domain(c, p.u);
    SurfaceJet jet = c.jet ? c.jet(p.u) : finite_difference_jet(c, p.u);
    validate_jet(jet, jet.analytic ? tol::geo_analytic : tol::geo_fd);
    Mat g = first_fundamental_form(jet);
    if (std::abs(g.determinant()) < tol::rank)
        throw RankDeficient("first fundamental form is singular");
    return jet;
}

Mat first_fundamental_form(const SurfaceJet& jet) {
    const int n = jet.dim();
    Mat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) g(i, j) = g(j, i) = jet.d1[i].dot(jet.d1[j]);
    return g;
}

TangentFrame tangent_frame(const SurfaceJet& jet) {
    const int n = jet.dim(), m = jet.ambient();
    Mat D(m, n);
    for (int i = 0; i < n; ++i) D.col(i) = jet.d1[i];
    Eigen::HouseholderQR<Mat> qr(D);
    Mat Q = qr.householderQ() * Mat::Identity(m, n);
    Mat R = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i)
        if (R(i, i) < 0) {
            R.row(i) = -R.row(i);
            Q.col(i) = -Q.col(i);
        }
    return {Q, R};
}

Vec complement_normal(const SurfaceJet& jet, double orientation) {
    const int n = jet.dim(), m = jet.ambient();
    Mat B(m, n + 1);
    B.col(0) = jet.value;
    for (int i = 0; i < n; ++i) B.col(i + 1) = jet.d1[i];
    Eigen::HouseholderQR<Mat> qr(B);
    Mat Q = qr.householderQ();
    Vec nu = Q.col(m - 1);
    Mat full(m, m);
    for (int i = 0; i < n; ++i) full.col(i) = jet.d1[i];
    full.col(n) = jet.value;
    full.col(n + 1) = nu;
    if (full.determinant() < 0) nu = -nu;
    return orientation * nu;
}

NormalJet unit_normal(const Hypersurface& s, const ChartPoint& p) {
    const Chart& c = chart_of(s, p);
    SurfaceJet jet = immersion_jet(s, p);
    NormalJet nj;
    if (c.normal_jet) {
        nj = c.normal_jet(p.u);
    } else {
        nj.value = complement_normal(jet, s.orientation);
        // derivatives by differencing the complement, sign-aligned to the
        // center; the complement itself carries difference noise, so the
        // step is kept well above the first-derivative one
        const double h = 1e-4;
        nj.d1.resize(jet.dim());
        for (int i = 0; i < jet.dim(); ++i) {
            ChartPoint pp = p, pm = p;
            pp.u[i] += h;
            pm.u[i] -= h;
            Vec np = complement_normal(c.jet ? c.jet(pp.u) : finite_difference_jet(c, pp.u),
                                       s.orientation);
            Vec nm = complement_normal(c.jet ? c.jet(pm.u) : finite_difference_jet(c, pm.u),
                                       s.orientation);
            if (np.dot(nj.value) < 0) np = -np;
            if (nm.dot(nj.value) < 0) nm = -nm;
            nj.d1[i] = (np - nm) / (2.0 * h);
        }
    }
    const double geo = s.geo_tol();
    if (std::abs(nj.value.norm() - 1.0) > geo) throw Error("normal is not unit");
    if (std::abs(nj.value.dot(jet.value)) > geo)
        throw Error("normal is not orthogonal to the position");
    for (const Vec& t : jet.d1)
        if (std::abs(nj.value.dot(t)) > geo * std::max(1.0, t.norm()))
            throw Error("normal is not orthogonal to the tangent space");
    return nj;
}

CurvatureData shape_operator(const Hypersurface& s, const ChartPoint& p) {
    SurfaceJet jet = immersion_jet(s, p);
    NormalJet nu = unit_normal(s, p);
    const int n = jet.dim();
    TangentFrame frame = tangent_frame(jet);
    Mat coordinate(n, n);
    if (nu.has_d1() && jet.analytic) {
        // A = -d(nu) restricted to the tangent space
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) coordinate(i, j) = -nu.d1[i].dot(jet.d1[j]);
    } else {
        // bilinear form <nu, d2>: the same operator without normal
        // derivatives, which difference jets cannot deliver cleanly
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) coordinate(i, j) = nu.value.dot(jet.d2[i][j]);
    }
    Mat rinv = frame.coeff.inverse();
    Mat A = rinv.transpose() * coordinate * rinv;
    double defect = (A - A.transpose()).cwiseAbs().maxCoeff();
    if (defect > 10.0 * tol::fd)
        throw AsymmetricShape("shape operator asymmetry " + std::to_string(defect));
    A = 0.5 * (A + A.transpose());
    Eigen::SelfAdjointEigenSolver<Mat> es(A);
    CurvatureData out;
    out.shape = A;
    out.kappas = es.eigenvalues();
    out.mean_h = out.kappas.mean();
    out.norm_a_sq = out.kappas.squaredNorm();
    return out;
}

ChartPoint project_to_chart(const Hypersurface& s, const Vec& target,
                            ChartPoint guess, int max_iter) {
    for (int it = 0; it < max_iter; ++it) {
        SurfaceJet jet = immersion_jet(s, guess);
        Vec r = jet.value - target;
        if (r.norm() < 1e-13) return guess;
        Mat J(jet.ambient(), jet.dim());
        for (int i = 0; i < jet.dim(); ++i) J.col(i) = jet.d1[i];
        Vec step = (J.transpose() * J).ldlt().solve(J.transpose() * r);
        guess.u -= step;
        if (step.norm() < 1e-14) return guess;
    }
    SurfaceJet jet = immersion_jet(s, guess);
    if ((jet.value - target).norm() < 1e-9) return guess;
    throw ProjectionFailed("chart projection did not converge");
}

double distance_to_surface(const Hypersurface& s, const Vec& target,
                           const ChartPoint& guess) {
    ChartPoint q = project_to_chart(s, target, guess);
    return (immersion_jet(s, q).value - target).norm();
}

ChartPoint random_point(const Hypersurface& s, Lcg& rng) {
    int ci = s.charts.size() > 1 ? static_cast<int>(rng.below(s.charts.size())) : 0;
    const Chart& c = s.charts[ci];
    Vec u(c.lo.size());
    for (int i = 0; i < u.size(); ++i) {
        double lo = c.lo[i], hi = c.hi[i];
        if (!c.periodic[i]) {
            lo += c.sample_margin;
            hi -= c.sample_margin;
        }
        u[i] = rng.uniform(lo, hi);
    }
    return {ci, u};
}

std::vector<ChartPoint> sample_points(const Hypersurface& s, int count, Lcg& rng) {
    std::vector<ChartPoint> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) pts.push_back(random_point(s, rng));
    return pts;
}

double chart_d1(const ChartFn& f, const Vec& u, int i, double h) {
    Vec up = u, um = u;
    up[i] += h;
    um[i] -= h;
    return (f(up) - f(um)) / (2.0 * h);
}

double chart_d2(const ChartFn& f, const Vec& u, int i, int j, double h) {
    if (i == j) {
        Vec up = u, um = u;
        up[i] += h;
        um[i] -= h;
        return (f(up) - 2.0 * f(u) + f(um)) / (h * h);
    }
    Vec upp = u, upm = u, ump = u, umm = u;
    upp[i] += h; upp[j] += h;
    upm[i] += h; upm[j] -= h;
    ump[i] -= h; ump[j] += h;
    umm[i] -= h; umm[j] -= h;
    return (f(upp) - f(upm) - f(ump) + f(umm)) / (4.0 * h * h);
}

Vec surface_gradient(const Hypersurface& s, const ChartPoint& p, const ChartFn& f,
                     double h) {
    SurfaceJet jet = immersion_jet(s, p);
    const int n = jet.dim();
    Mat ginv = first_fundamental_form(jet).inverse();
    Vec df(n);
    for (int j = 0; j < n; ++j) df[j] = chart_d1(f, p.u, j, h);
    Vec grad = Vec::Zero(jet.ambient());
    for (int i = 0; i < n; ++i) {
        double coef = 0.0;
        for (int j = 0; j < n; ++j) coef += ginv(i, j) * df[j];
        grad += coef * jet.d1[i];
    }
    return grad;
}

double laplace_beltrami(const Hypersurface& s, const ChartPoint& p, const ChartFn& f,
                        double h) {
    SurfaceJet jet = immersion_jet(s, p);
    const int n = jet.dim();
    Mat g = first_fundamental_form(jet);
    Mat ginv = g.inverse();
    // dg[i](j,l) = <d2_ij, d1_l> + <d1_j, d2_il>, exact from the jets
    std::vector<Mat> dg(n, Mat(n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                dg[i](j, l) = jet.d2[i][j].dot(jet.d1[l]) + jet.d1[j].dot(jet.d2[i][l]);
    Vec df(n);
    for (int k = 0; k < n; ++k) df[k] = chart_d1(f, p.u, k, tol::fd_step);
    double lap = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double hess = chart_d2(f, p.u, i, j, h);
            double gamma_term = 0.0;
            for (int k = 0; k < n; ++k) {
                double gamma = 0.0;
                for (int l = 0; l < n; ++l)
                    gamma += 0.5 * ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
                gamma_term += gamma * df[k];
            }
            lap += ginv(i, j) * (hess - gamma_term);
        }
    return lap;
}

double mean_curvature_spread(const Hypersurface& s, int count, std::uint64_t seed) {
    Lcg rng(seed);
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < count; ++i) {
        double m = shape_operator(s, random_point(s, rng)).mean_h;
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    return hi - lo;
}

double shape_norm_spread(const Hypersurface& s, int count, std::uint64_t seed) {
    Lcg rng(seed);
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < count; ++i) {
        double m = shape_operator(s, random_point(s, rng)).norm_a_sq;
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    return hi - lo;
}

SurfaceJet jet_from_taylor(const std::vector<TJet>& comps, int nvars) {
    SurfaceJet jet;
    const int m = static_cast<int>(comps.size());
    jet.value.resize(m);
    jet.d1.assign(nvars, Vec(m));
    jet.d2.assign(nvars, std::vector<Vec>(nvars, Vec(m)));
    for (int a = 0; a < m; ++a) {
        jet.value[a] = comps[a].value();
        for (int i = 0; i < nvars; ++i) {
            jet.d1[i][a] = comps[a].d1(i);
            for (int j = 0; j < nvars; ++j) jet.d2[i][j][a] = comps[a].d2(i, j);
        }
    }
    return jet;
}

NormalJet normal_jet_from_taylor(const std::vector<TJet>& comps, int nvars) {
    NormalJet nj;
    const int m = static_cast<int>(comps.size());
    nj.value.resize(m);
    nj.d1.assign(nvars, Vec(m));
    for (int a = 0; a < m; ++a) {
        nj.value[a] = comps[a].value();
        for (int i = 0; i < nvars; ++i) nj.d1[i][a] = comps[a].d1(i);
    }
    return nj;
}

} // namespace cmclab
