#pragma once

#include <array>
#include <complex>
#include <string>

#include "netmoment/field.hpp"

namespace netmoment {

// Bessel functions of the first kind. Power series for |x| < 20, Hankel
// expansion beyond; absolute accuracy better than 1e-12 on |x| <= 50.
double bessel_j0(double x);
double bessel_j1(double x);
double bessel_j2(double x);
double bessel_j1_prime(double x);

// Struve functions by their power series, 0 <= x <= 50.
double struve_h0(double x);
double struve_h1(double x);
// H_{-1}(x) = 2/pi - H_1(x)
double struve_hm1(double x);

// Tails int_rho^inf f(x) dx, except the *_total kinds which are
// int_rho^inf J0 and int_rho^inf J2 (both conditionally convergent).
enum class TailKind {
    j1_over_x1,
    j1_over_x3,
    j1_over_x5,
    j1_over_x7,
    j0_over_x2,
    j0_total,
    j2_total,
    j2_over_x2,
};

inline constexpr std::array<TailKind, 8> kAllTailKinds = {
    TailKind::j1_over_x1, TailKind::j1_over_x3, TailKind::j1_over_x5, TailKind::j1_over_x7,
    TailKind::j0_over_x2, TailKind::j0_total,   TailKind::j2_total,   TailKind::j2_over_x2,
};

std::string to_string(TailKind kind);

// Closed form in J0, J1, J1', H0, H1. rho in (0, 50].
double tail_integral(TailKind kind, double rho);

// Right-hand side of the odd-power reduction
// int J1/x^(2n+1) = [2n J1/rho^2n + J1'/rho^(2n-1) - int J1/x^(2n-1)] / (4n^2 - 1),
// evaluated with the closed-form tails; n in 1..3.
double tail_recursion_rhs(int n, double rho);

// Oscillation-aware reference quadrature of the same tails: Gauss-Kronrod
// panels between consecutive Bessel zeros, alternating panel series summed
// with a Levin u-transform. Uses std::cyl_bessel_j for the integrand.
double tail_integral_quadrature(TailKind kind, double rho);

// int_0^2pi of the four vanishing trigonometric families, by an n-point
// periodic trapezoid:
//   cos_odd_cos:  cos(a cos t) cos^(2m+1) t sin^n t
//   cos_odd_sin:  cos(a cos t) cos^m t sin^(2n+1) t
//   sin_odd_sin:  sin(a cos t) cos^m t sin^(2n+1) t
//   sin_even_cos: sin(a cos t) cos^(2m) t sin^n t
enum class TrigKind { cos_odd_cos, cos_odd_sin, sin_odd_sin, sin_even_cos };
double trig_integral(TrigKind kind, double alpha, int m, int n, int points = 4096);

// Exterior integrals of the asymptotic field groups against sin/cos(2 pi k1 x1):
// i_sin[0..3] pair with a1(1), a4(1), a5(1), a5(4); i_cos[0..3] with a0, a2,
// a3(1), a3(2).
struct SinCosComponents {
    std::array<double, 4> i_sin{};
    std::array<double, 4> i_cos{};
};

// Requires k1 > 0, A > 0 and 2 pi k1 A <= 50.
SinCosComponents sin_cos_components(double k1, double A);

// Same closed forms continued to complex k1 (|2 pi k1 A| <= 50, k1 != 0);
// used for contour-integral checks of the Taylor table.
struct SinCosComponentsC {
    std::array<std::complex<double>, 4> i_sin{};
    std::array<std::complex<double>, 4> i_cos{};
};
SinCosComponentsC sin_cos_components(std::complex<double> k1, double A);

// k1-derivatives at 0+ of the two exterior integrals, per coefficient group.
// sin[i][g] is the order sin_orders[i] derivative coefficient of group g of
// I^sin (groups as in SinCosComponents), cos[i][g] likewise for I^cos.
struct SinCosTaylor {
    static constexpr std::array<int, 6> sin_orders = {1, 3, 5, 7, 9, 11};
    static constexpr std::array<int, 6> cos_orders = {0, 2, 4, 6, 8, 10};
    std::array<std::array<double, 4>, 6> sin{};
    std::array<std::array<double, 4>, 6> cos{};
};

SinCosTaylor sin_cos_taylor(double A);

// Contractions with a coefficient set: the derivative of
// a1(1) I1 + a4(1) I2 + a5(1) I3 + a5(4) I4 (sin), a0 I1 + a2 I2 + a3(1) I3 + a3(2) I4 (cos).
double contract_sin(const SinCosTaylor& t, int index, const AsymptCoeffs& c);
double contract_cos(const SinCosTaylor& t, int index, const AsymptCoeffs& c);

}  // namespace netmoment
