#pragma once
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace cmclab {

/// Truncated Taylor jet: value plus all partial derivatives up to total
/// order 3 in up to 3 variables. Coefficients are stored in Taylor
/// convention (c_alpha = d^alpha f / alpha!), which makes products a plain
/// coefficient convolution. This is enough machinery to push closed-form
/// chart parametrizations through products, cross products and
/// normalizations and read off exact first/second (and third) derivatives.
class TJet {
public:
    static constexpr int kMaxVars = 6;
    static constexpr int kOrder = 3;
    static constexpr int kMaxCoeffs = 84; // C(6+3,3)

    TJet() : nvars_(1) { c_.fill(0.0); }

    static TJet constant(int nvars, double x) {
        TJet j(nvars);
        j.c_[0] = x;
        return j;
    }

    /// Seed for the i-th independent variable with value x.
    static TJet variable(int nvars, int i, double x) {
        TJet j(nvars);
        j.c_[0] = x;
        j.c_[linear_pos(nvars, i)] = 1.0;
        return j;
    }

    int nvars() const { return nvars_; }
    double value() const { return c_[0]; }
    double d1(int i) const { return c_[linear_pos(nvars_, i)]; }
    double d2(int i, int j) const;
    double d3(int i, int j, int k) const;

    TJet operator-() const;
    TJet& operator+=(const TJet& o);
    TJet& operator-=(const TJet& o);
    TJet& operator+=(double x) { c_[0] += x; return *this; }
    TJet& operator-=(double x) { c_[0] -= x; return *this; }
    TJet& operator*=(double x);

    friend TJet operator+(TJet a, const TJet& b) { a += b; return a; }
    friend TJet operator-(TJet a, const TJet& b) { a -= b; return a; }
    friend TJet operator+(TJet a, double b) { a += b; return a; }
    friend TJet operator+(double a, TJet b) { b += a; return b; }
    friend TJet operator-(TJet a, double b) { a -= b; return a; }
    friend TJet operator-(double a, const TJet& b) { TJet r = -b; r += a; return r; }
    friend TJet operator*(TJet a, double b) { a *= b; return a; }
    friend TJet operator*(double a, TJet b) { b *= a; return b; }
    friend TJet operator*(const TJet& a, const TJet& b) { return mul(a, b); }
    friend TJet operator/(const TJet& a, const TJet& b) { return mul(a, inverse(b)); }
    friend TJet operator/(TJet a, double b) { a *= 1.0 / b; return a; }
    friend TJet operator/(double a, const TJet& b) { TJet r = inverse(b); r *= a; return r; }

    /// Compose with an analytic scalar function given by its derivatives
    /// g(f0), g'(f0), g''(f0), g'''(f0) at the jet's value.
    TJet compose(double g0, double g1, double g2, double g3) const;

    /// Partial derivative as a jet. The result is valid one order lower
    /// (its top-order coefficients are unknown and set to zero).
    TJet differentiate(int i) const;

    friend TJet sin(const TJet& f) {
        double v = f.value();
        return f.compose(std::sin(v), std::cos(v), -std::sin(v), -std::cos(v));
    }
    friend TJet cos(const TJet& f) {
        double v = f.value();
        return f.compose(std::cos(v), -std::sin(v), -std::cos(v), std::sin(v));
    }
    friend TJet sqrt(const TJet& f) {
        double v = f.value();
        double s = std::sqrt(v);
        return f.compose(s, 0.5 / s, -0.25 / (s * v), 0.375 / (s * v * v));
    }
    friend TJet inverse(const TJet& f) {
        double v = f.value();
        double iv = 1.0 / v;
        return f.compose(iv, -iv * iv, 2.0 * iv * iv * iv, -6.0 * iv * iv * iv * iv);
    }

private:
    explicit TJet(int nvars) : nvars_(nvars) {
        assert(nvars >= 1 && nvars <= kMaxVars);
        c_.fill(0.0);
    }

    static TJet mul(const TJet& a, const TJet& b);
    static int linear_pos(int nvars, int i);

    int nvars_;
    std::array<double, kMaxCoeffs> c_;

    friend struct JetTables;
};

// ---- small vector calculus over an arbitrary scalar (double or TJet) ----

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    T s = a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <class T>
std::vector<T> cross3(const std::vector<T>& a, const std::vector<T>& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

/// Vector orthogonal to a, b, c in R^4 with <w, cross4(a,b,c)> = det[w;a;b;c].
template <class T>
std::vector<T> cross4(const std::vector<T>& a, const std::vector<T>& b,
                      const std::vector<T>& c) {
    auto det3 = [](const T& a0, const T& a1, const T& a2,
                   const T& b0, const T& b1, const T& b2,
                   const T& c0, const T& c1, const T& c2) {
        return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) +
               a2 * (b0 * c1 - b1 * c0);
    };
    std::vector<T> r;
    r.reserve(4);
    r.push_back(det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]));
    r.push_back(-det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]));
    r.push_back(det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]));
    r.push_back(-det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]));
    return r;
}

template <class T>
std::vector<T> normalized(const std::vector<T>& v) {
    using std::sqrt;
    T inv = 1.0 / sqrt(dot(v, v));
    std::vector<T> r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(x * inv);
    return r;
}

/// Standard spherical-coordinate chart of the unit m-sphere in R^{m+1}:
/// y = (cos t1, sin t1 cos t2, ..., sin t1 ... sin tm). The last angle is the
/// periodic one; the others live in (0, pi).
template <class T>
std::vector<T> sphere_point(const std::vector<T>& angles) {
    using std::cos;
    using std::sin;
    const std::size_t m = angles.size();
    std::vector<T> y;
    y.reserve(m + 1);
    // innermost circle, then wrap outward
    y.push_back(cos(angles[m - 1]));
    y.push_back(sin(angles[m - 1]));
    for (std::size_t level = 1; level < m; ++level) {
        const T& t = angles[m - 1 - level];
        T ct = cos(t), st = sin(t);
        std::vector<T> next;
        next.reserve(y.size() + 1);
        next.push_back(ct);
        for (const auto& z : y) next.push_back(st * z);
        y = std::move(next);
    }
    return y;
}

} // namespace cmclab
