#include "netmoment/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "series.hpp"

namespace netmoment {

namespace {

using detail::Complex;
using detail::Real;

constexpr double kSeriesLimit = 20.0;
constexpr double kMaxArg = 50.0;

long double bessel_series_ld(int n, long double x) {
    const long double q = x * x / 4;
    long double term = 1;
    for (int i = 1; i <= n; ++i) term *= x / (2 * i);
    long double sum = term;
    for (int m = 1; m < 200; ++m) {
        term *= -q / (m * (m + n));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) && m > x) break;
    }
    return sum;
}

// Hankel expansion J_n(x) ~ sqrt(2/(pi x)) (P cos chi - Q sin chi), x > 0.
double bessel_hankel(int n, double x) {
    const double mu = 4.0 * n * n;
    double P = 0, Q = 0, a = 1, prev = 1e300;
    for (int k = 0; k < 60; ++k) {
        const double t = a / std::pow(x, k);
        if (std::fabs(t) > prev) break;
        prev = std::fabs(t);
        const double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) P += sgn * t; else Q += sgn * t;
        if (prev < 1e-18) break;
        a *= (mu - (2.0 * k + 1) * (2.0 * k + 1)) / (8.0 * (k + 1));
    }
    const double chi = x - (0.5 * n + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (P * std::cos(chi) - Q * std::sin(chi));
}

double bessel(int n, double x) {
    const double sign = (n % 2 == 1 && x < 0) ? -1.0 : 1.0;
    const double ax = std::fabs(x);
    if (ax < kSeriesLimit) return sign * static_cast<double>(bessel_series_ld(n, ax));
    return sign * bessel_hankel(n, ax);
}

void check_struve_domain(double x) {
    if (!(x >= 0.0 && x <= kMaxArg)) {
        throw std::domain_error("Struve functions are implemented on [0, 50]");
    }
}

void check_rho(double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("tail integral needs rho > 0");
    if (rho > kMaxArg) throw std::domain_error("tail integral closed form needs rho <= 50");
}

double pick(const detail::Tails<Real>& s, TailKind kind) {
    switch (kind) {
        case TailKind::j1_over_x1: return static_cast<double>(s.t1);
        case TailKind::j1_over_x3: return static_cast<double>(s.t3);
        case TailKind::j1_over_x5: return static_cast<double>(s.t5);
        case TailKind::j1_over_x7: return static_cast<double>(s.t7);
        case TailKind::j0_over_x2: return static_cast<double>(s.j0x2);
        case TailKind::j0_total: return static_cast<double>(s.j0tot);
        case TailKind::j2_total: return static_cast<double>(s.j2tot);
        case TailKind::j2_over_x2: return static_cast<double>(s.j2x2);
    }
    throw std::invalid_argument("unknown tail kind");
}

}  // namespace

double bessel_j0(double x) { return bessel(0, x); }
double bessel_j1(double x) { return bessel(1, x); }
double bessel_j2(double x) { return bessel(2, x); }

double bessel_j1_prime(double x) {
    // J1' = (J0 - J2)/2
    return 0.5 * (bessel(0, x) - bessel(2, x));
}

double struve_h0(double x) {
    check_struve_domain(x);
    return static_cast<double>(detail::struve_series(0, Real(x)));
}

double struve_h1(double x) {
    check_struve_domain(x);
    return static_cast<double>(detail::struve_series(1, Real(x)));
}

double struve_hm1(double x) { return 2.0 / kPi - struve_h1(x); }

std::string to_string(TailKind kind) {
    switch (kind) {
        case TailKind::j1_over_x1: return "j1_over_x1";
        case TailKind::j1_over_x3: return "j1_over_x3";
        case TailKind::j1_over_x5: return "j1_over_x5";
        case TailKind::j1_over_x7: return "j1_over_x7";
        case TailKind::j0_over_x2: return "j0_over_x2";
        case TailKind::j0_total: return "j0_total";
        case TailKind::j2_total: return "j2_total";
        case TailKind::j2_over_x2: return "j2_over_x2";
    }
    return "unknown";
}

double tail_integral(TailKind kind, double rho) {
    check_rho(rho);
    return pick(detail::tails(Real(rho)), kind);
}

double tail_recursion_rhs(int n, double rho) {
    if (n < 1 || n > 3) throw std::invalid_argument("recursion index must be 1, 2 or 3");
    check_rho(rho);
    const auto s = detail::tails(Real(rho));
    const Real r(rho);
    const Real lower = (n == 1) ? s.t1 : (n == 2 ? s.t3 : s.t5);
    const Real v = (2 * n * s.j1 / pow(r, 2 * n) + s.j1p / pow(r, 2 * n - 1) - lower) /
                   (4 * n * n - 1);
    return static_cast<double>(v);
}

double trig_integral(TrigKind kind, double alpha, int m, int n, int points) {
    if (points < 4) throw std::invalid_argument("trapezoid needs at least 4 points");
    if (m < 0 || n < 0) throw std::invalid_argument("negative trigonometric power");
    double s = 0.0;
    for (int j = 0; j < points; ++j) {
        const double t = 2.0 * kPi * j / points;
        const double c = std::cos(t), sn = std::sin(t);
        double f = 0.0;
        switch (kind) {
            case TrigKind::cos_odd_cos:
                f = std::cos(alpha * c) * std::pow(c, 2 * m + 1) * std::pow(sn, n);
                break;
            case TrigKind::cos_odd_sin:
                f = std::cos(alpha * c) * std::pow(c, m) * std::pow(sn, 2 * n + 1);
                break;
            case TrigKind::sin_odd_sin:
                f = std::sin(alpha * c) * std::pow(c, m) * std::pow(sn, 2 * n + 1);
                break;
            case TrigKind::sin_even_cos:
                f = std::sin(alpha * c) * std::pow(c, 2 * m) * std::pow(sn, n);
                break;
        }
        s += f;
    }
    return s * 2.0 * kPi / points;
}

SinCosComponents sin_cos_components(double k1, double A) {
    if (!(k1 > 0.0) || !(A > 0.0)) throw std::invalid_argument("need k1 > 0 and A > 0");
    if (2.0 * kPi * k1 * A > kMaxArg) throw std::domain_error("2 pi k1 A exceeds 50");
    Real is[4], ic[4];
    detail::sin_cos_closed_forms(Real(k1), Real(A), is, ic);
    SinCosComponents out;
    for (int i = 0; i < 4; ++i) {
        out.i_sin[i] = static_cast<double>(is[i]);
        out.i_cos[i] = static_cast<double>(ic[i]);
    }
    return out;
}

SinCosComponentsC sin_cos_components(std::complex<double> k1, double A) {
    if (k1 == 0.0 || !(A > 0.0)) throw std::invalid_argument("need k1 != 0 and A > 0");
    if (2.0 * kPi * std::abs(k1) * A > kMaxArg) throw std::domain_error("|2 pi k1 A| exceeds 50");
    Complex is[4], ic[4];
    detail::sin_cos_closed_forms(Complex(k1.real(), k1.imag()), Real(A), is, ic);
    SinCosComponentsC out;
    for (int i = 0; i < 4; ++i) {
        out.i_sin[i] = {static_cast<double>(is[i].real()), static_cast<double>(is[i].imag())};
        out.i_cos[i] = {static_cast<double>(ic[i].real()), static_cast<double>(ic[i].imag())};
    }
    return out;
}

SinCosTaylor sin_cos_taylor(double A) {
    if (!(A > 0.0)) throw std::invalid_argument("radius A must be positive");
    const double pi = kPi;
    const double A2 = A * A;
    // Leading (a1 or a0) coefficient per order, then the other groups as
    // multiples of it over A^2.
    struct Row {
        double lead;
        double r2, r3, r4;
    };
    const Row sin_rows[6] = {
        {2 * std::pow(pi, 2) / A, 1.0 / 3, 1.0 / 4, 1.0 / 12},
        {6 * std::pow(pi, 4) * A, -1.0, -5.0 / 6, -1.0 / 6},
        {-20.0 / 3 * std::pow(pi, 6) * std::pow(A, 3), 3.0, 21.0 / 8, 3.0 / 8},
        {14 * std::pow(pi, 8) * std::pow(A, 5), 5.0 / 3, 3.0 / 2, 1.0 / 6},
        {-36 * std::pow(pi, 10) * std::pow(A, 7), 7.0 / 5, 77.0 / 60, 7.0 / 60},
        {308.0 / 3 * std::pow(pi, 12) * std::pow(A, 9), 9.0 / 7, 117.0 / 98, 9.0 / 98},
    };
    const Row cos_rows[6] = {
        {2 * pi / A, 1.0 / 3, 1.0 / 6, 1.0 / 6},
        {4 * std::pow(pi, 3) * A, -1.0, -3.0 / 4, -1.0 / 4},
        {-4 * std::pow(pi, 5) * std::pow(A, 3), 3.0, 5.0 / 2, 1.0 / 2},
        {8 * std::pow(pi, 7) * std::pow(A, 5), 5.0 / 3, 35.0 / 24, 5.0 / 24},
        {-20 * std::pow(pi, 9) * std::pow(A, 7), 7.0 / 5, 63.0 / 50, 7.0 / 50},
        {56 * std::pow(pi, 11) * std::pow(A, 9), 9.0 / 7, 33.0 / 28, 3.0 / 28},
    };
    SinCosTaylor t;
    for (int i = 0; i < 6; ++i) {
        const Row& s = sin_rows[i];
        t.sin[i] = {s.lead, s.lead * s.r2 / A2, s.lead * s.r3 / A2, s.lead * s.r4 / A2};
        const Row& c = cos_rows[i];
        t.cos[i] = {c.lead, c.lead * c.r2 / A2, c.lead * c.r3 / A2, c.lead * c.r4 / A2};
    }
    return t;
}

double contract_sin(const SinCosTaylor& t, int index, const AsymptCoeffs& c) {
    const auto& r = t.sin.at(index);
    return r[0] * c.a1[0] + r[1] * c.a4[0] + r[2] * c.a5[0] + r[3] * c.a5[3];
}

double contract_cos(const SinCosTaylor& t, int index, const AsymptCoeffs& c) {
    const auto& r = t.cos.at(index);
    return r[0] * c.a0 + r[1] * c.a2 + r[2] * c.a3[0] + r[3] * c.a3[1];
}

}  // namespace netmoment
