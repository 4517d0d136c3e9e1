#include "cmclab/partial_fractions.hpp"

#include <cmath>

namespace cmclab {

void Poly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (c != 0) p.coeffs.push_back(c);
    return p;
}

Poly Poly::from_linear(const LinearPoly& lp) {
    Poly p;
    p.coeffs = {lp.offset, lp.slope};
    p.trim();
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    Poly r;
    r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs.size(); ++j)
            r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    r.trim();
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.coeffs.assign(std::max(coeffs.size(), o.coeffs.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += coeffs[i];
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-1); }

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return {};
    Poly r = *this;
    for (auto& v : r.coeffs) v *= c;
    return r;
}

std::vector<Poly> deleted_products(const std::vector<LinearPoly>& ps) {
    const int k = static_cast<int>(ps.size());
    if (k < 2) throw BadSpec("deleted products need at least two factors");
    for (const auto& p : ps)
        if (p.slope == 0) throw BadSpec("factors must have degree one");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (ps[i].root() == ps[j].root())
                throw DuplicateRoot("factors share the root " + to_string(ps[i].root()));
    std::vector<Poly> qs;
    qs.reserve(k);
    for (int i = 0; i < k; ++i) {
        Poly q = Poly::constant(1);
        for (int j = 0; j < k; ++j)
            if (j != i) q = q * Poly::from_linear(ps[j]);
        qs.push_back(std::move(q));
    }
    return qs;
}

IndependenceVerdict independence_verdict(const std::vector<Poly>& qs) {
    const int k = static_cast<int>(qs.size());
    int cols = 0;
    for (const auto& q : qs) cols = std::max(cols, q.degree() + 1);
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(cols, Rational(0)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= qs[i].degree(); ++j) m[i][j] = qs[i].coeffs[j];

    // exact Gaussian elimination
    int rank = 0;
    for (int col = 0; col < cols && rank < k; ++col) {
        int pivot = -1;
        for (int row = rank; row < k; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int row = rank + 1; row < k; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] / m[rank][col];
            for (int c = col; c < cols; ++c) m[row][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return {rank, rank == k};
}

FractionVerdict partial_fraction_verdict(const std::vector<LinearPoly>& ps,
                                         const std::vector<Rational>& as,
                                         const Rational& d) {
    if (as.size() != ps.size()) throw BadSpec("coefficient count mismatch");
    std::vector<Poly> qs = deleted_products(ps);
    Poly total;
    for (std::size_t i = 0; i < qs.size(); ++i) total = total + qs[i].scaled(as[i]);
    Poly whole = Poly::constant(1);
    for (const auto& p : ps) whole = whole * Poly::from_linear(p);
    total = total - whole.scaled(d);

    FractionVerdict verdict;
    if (total.is_zero()) {
        verdict.identity_holds = true;
        // the independence of the deleted products forces the all-zero case
        for (const auto& a : as)
            if (a != 0) throw Error("identity held with a nonzero coefficient");
        if (d != 0) throw Error("identity held with a nonzero right-hand side");
        return verdict;
    }
    verdict.witness_degree = total.degree();
    verdict.witness = total.coeffs.back();
    return verdict;
}

Rational rationalize(double x, std::int64_t max_den) {
    if (!std::isfinite(x)) throw BadSpec("cannot rationalize a non-finite value");
    bool negative = x < 0;
    double v = std::abs(x);
    // convergents p/q of the continued fraction of v
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 4e15) break;
        std::int64_t a = static_cast<std::int64_t>(fl);
        __int128 p2 = static_cast<__int128>(a) * p1 + p0;
        __int128 q2 = static_cast<__int128>(a) * q1 + q0;
        if (q2 > max_den || p2 > (static_cast<__int128>(1) << 62)) break;
        p0 = p1; q0 = q1;
        p1 = static_cast<std::int64_t>(p2);
        q1 = static_cast<std::int64_t>(q2);
        double rem = frac - fl;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    Rational r(p1, q1 == 0 ? 1 : q1);
    return negative ? -r : r;
}

std::string to_string(const Rational& r) {
    return r.str();
}

} // namespace cmclab
