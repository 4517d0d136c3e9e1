#include "cmclab/jets.hpp"

#include <algorithm>

namespace cmclab {
namespace {

using Alpha = std::array<int, TJet::kMaxVars>;

// Multi-index bookkeeping shared by all jets with the same variable count.
struct JetTables {
    int nvars = 0;
    int ncoeffs = 0;
    std::vector<Alpha> alphas;                    // graded order
    std::vector<int> pos;                         // base-4 encoding -> index
    std::vector<std::array<int, 3>> prod;         // (i, j, k): alpha_k = alpha_i + alpha_j
    std::array<double, TJet::kMaxCoeffs> fact{};  // alpha! per coefficient

    explicit JetTables(int v) : nvars(v) {
        pos.assign(1 << (2 * TJet::kMaxVars), -1);
        for (int deg = 0; deg <= TJet::kOrder; ++deg) {
            Alpha a{};
            enumerate(a, 0, deg);
        }
        ncoeffs = static_cast<int>(alphas.size());
        for (int i = 0; i < ncoeffs; ++i) {
            double f = 1.0;
            for (int d = 0; d < nvars; ++d)
                for (int m = 2; m <= alphas[i][d]; ++m) f *= m;
            fact[i] = f;
        }
        for (int i = 0; i < ncoeffs; ++i)
            for (int j = 0; j < ncoeffs; ++j) {
                Alpha s{};
                int total = 0;
                for (int d = 0; d < TJet::kMaxVars; ++d) {
                    s[d] = alphas[i][d] + alphas[j][d];
                    total += s[d];
                }
                if (total > TJet::kOrder) continue;
                prod.push_back({i, j, pos[encode(s)]});
            }
    }

    static int encode(const Alpha& a) {
        int code = 0;
        for (int d = TJet::kMaxVars - 1; d >= 0; --d) code = 4 * code + a[d];
        return code;
    }

    void enumerate(Alpha& a, int var, int remaining) {
        if (var == nvars) {
            if (remaining == 0) {
                pos[encode(a)] = static_cast<int>(alphas.size());
                alphas.push_back(a);
            }
            return;
        }
        for (int d = remaining; d >= 0; --d) {
            a[var] = d;
            enumerate(a, var + 1, remaining - d);
        }
        a[var] = 0;
    }
};

const JetTables& tables(int nvars) {
    static const std::array<JetTables, TJet::kMaxVars> all{
        JetTables(1), JetTables(2), JetTables(3),
        JetTables(4), JetTables(5), JetTables(6)};
    return all[nvars - 1];
}

} // namespace

int TJet::linear_pos(int nvars, int i) {
    Alpha a{};
    a[i] = 1;
    return tables(nvars).pos[JetTables::encode(a)];
}

double TJet::d2(int i, int j) const {
    Alpha a{};
    a[i] += 1;
    a[j] += 1;
    const auto& t = tables(nvars_);
    int k = t.pos[JetTables::encode(a)];
    return c_[k] * t.fact[k];
}

double TJet::d3(int i, int j, int k) const {
    Alpha a{};
    a[i] += 1;
    a[j] += 1;
    a[k] += 1;
    const auto& t = tables(nvars_);
    int p = t.pos[JetTables::encode(a)];
    return c_[p] * t.fact[p];
}

TJet TJet::operator-() const {
    TJet r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

TJet& TJet::operator+=(const TJet& o) {
    assert(nvars_ == o.nvars_);
    for (int i = 0; i < tables(nvars_).ncoeffs; ++i) c_[i] += o.c_[i];
    return *this;
}

TJet& TJet::operator-=(const TJet& o) {
    assert(nvars_ == o.nvars_);
    for (int i = 0; i < tables(nvars_).ncoeffs; ++i) c_[i] -= o.c_[i];
    return *this;
}

TJet& TJet::operator*=(double x) {
    for (auto& v : c_) v *= x;
    return *this;
}

TJet TJet::mul(const TJet& a, const TJet& b) {
    assert(a.nvars_ == b.nvars_);
    TJet r(a.nvars_);
    for (const auto& t : tables(a.nvars_).prod)
        r.c_[t[2]] += a.c_[t[0]] * b.c_[t[1]];
    return r;
}

TJet TJet::differentiate(int i) const {
    const auto& t = tables(nvars_);
    TJet r(nvars_);
    for (int a = 0; a < t.ncoeffs; ++a) {
        if (t.alphas[a][i] == 0) continue;
        Alpha beta = t.alphas[a];
        beta[i] -= 1;
        r.c_[t.pos[JetTables::encode(beta)]] = c_[a] * t.alphas[a][i];
    }
    return r;
}

TJet TJet::compose(double g0, double g1, double g2, double g3) const {
    TJet d = *this;
    d.c_[0] = 0.0;
    TJet d2j = mul(d, d);
    TJet d3j = mul(d2j, d);
    TJet r = d3j;
    r *= g3 / 6.0;
    TJet t2 = d2j;
    t2 *= g2 / 2.0;
    r += t2;
    TJet t1 = d;
    t1 *= g1;
    r += t1;
    r.c_[0] += g0;
    return r;
}

} // namespace cmclab
