#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "cmclab/errors.hpp"

namespace cmclab {

using Rational = boost::multiprecision::cpp_rational;

/// Degree-one polynomial slope*X + offset with slope != 0.
struct LinearPoly {
    Rational slope;
    Rational offset;
    Rational root() const { return -offset / slope; }
};

/// Dense polynomial over the rationals, coefficients ascending.
struct Poly {
    std::vector<Rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    void trim();
    Rational eval(const Rational& x) const;

    static Poly constant(const Rational& c);
    static Poly from_linear(const LinearPoly& p);
    Poly operator*(const Poly& o) const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly scaled(const Rational& c) const;
};

/// q_i = product of all p_j with j != i. Requires k >= 2 and pairwise
/// distinct roots (exact comparison); each q_i then has degree exactly k-1,
/// vanishes at every other root and not at its own.
std::vector<Poly> deleted_products(const std::vector<LinearPoly>& ps);

/// Exact rank of the coefficient matrix of a polynomial family.
struct IndependenceVerdict {
    int rank = 0;
    bool independent = false;
};
IndependenceVerdict independence_verdict(const std::vector<Poly>& qs);

/// Decision for sum_i a_i / p_i(X) == d as an identity of rational
/// functions. Holds only in the all-zero case; otherwise the returned
/// witness is a nonzero coefficient of sum_i a_i q_i - d * prod_j p_j.
struct FractionVerdict {
    bool identity_holds = false;
    int witness_degree = -1;
    Rational witness = 0;
};
FractionVerdict partial_fraction_verdict(const std::vector<LinearPoly>& ps,
                                         const std::vector<Rational>& as,
                                         const Rational& d);

/// Continued-fraction approximation with a denominator cap; exact for
/// rationals that already fit.
Rational rationalize(double x, std::int64_t max_den = 1000000);

std::string to_string(const Rational& r);

} // namespace cmclab
