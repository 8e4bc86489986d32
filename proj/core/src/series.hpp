#pragma once

// Multiprecision power series and closed forms shared by specfun.cpp.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace netmoment::detail {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

inline const Real& pi_real() {
    static const Real p = boost::math::constants::pi<Real>();
    return p;
}

template <class T>
Real magnitude(const T& v) {
    using boost::multiprecision::abs;
    return Real(abs(v));
}

// J_n(x) = sum_m (-1)^m (x/2)^(2m+n) / (m! (m+n)!)
template <class T>
T bessel_series(int n, const T& x) {
    const T q = x * x / 4;
    T term = 1;
    for (int i = 1; i <= n; ++i) term *= x / (2 * i);
    T sum = term;
    Real peak = magnitude(term);
    const Real eps("1e-55");
    for (int m = 1; m < 1000; ++m) {
        term *= -q / (m * (m + n));
        sum += term;
        const Real t = magnitude(term);
        if (t > peak) peak = t;
        if (t < eps * peak && m > 2) break;
    }
    return sum;
}

// H_n(x) = (x/2)^(n+1) sum_k (-1)^k (x/2)^2k / (Gamma(k+3/2) Gamma(k+n+3/2))
template <class T>
T struve_series(int n, const T& x) {
    const Real& pi = pi_real();
    const T half = x / 2;
    // Gamma(3/2) Gamma(n+3/2): pi/4 for n = 0, 3 pi/8 for n = 1
    T term = (n == 0) ? T(half * 4 / pi) : T(half * half * 8 / (3 * pi));
    T sum = term;
    const T q = half * half;
    Real peak = magnitude(term);
    const Real eps("1e-55");
    for (int k = 0; k < 1000; ++k) {
        term *= -q / ((Real(k) + Real(1.5)) * (Real(k + n) + Real(1.5)));
        sum += term;
        const Real t = magnitude(term);
        if (t > peak) peak = t;
        if (t < eps * peak && k > 2) break;
    }
    return sum;
}

template <class T>
struct Tails {
    T j0, j1, j2, j1p;
    T w;  // (pi/2) (J0 H1 - J1 H0)
    T t1, t3, t5, t7;  // int_rho^inf J1/x^p
    T j0x2, j0tot, j2tot, j2x2;
};

template <class T>
Tails<T> tails(const T& r) {
    Tails<T> s;
    s.j0 = bessel_series(0, r);
    s.j1 = bessel_series(1, r);
    s.j2 = bessel_series(2, r);
    s.j1p = s.j0 - s.j1 / r;
    const T h0 = struve_series(0, r);
    const T h1 = struve_series(1, r);
    s.w = pi_real() / 2 * (s.j0 * h1 - s.j1 * h0);
    const T r2 = r * r, r3 = r2 * r, r4 = r3 * r, r5 = r4 * r, r6 = r5 * r;
    const T& J0 = s.j0;
    const T& J1 = s.j1;
    const T& J1p = s.j1p;
    const T& W = s.w;
    s.j0tot = 1 - r * J0 + r * W;
    s.j2tot = 1 + 2 * J1 - r * J0 + r * W;
    s.j0x2 = J0 / r - J1 - 1 + r * J0 - r * W;
    const T j2p = J1 - 2 * s.j2 / r;
    s.j2x2 = -s.j2 / (3 * r) - j2p / 3 + T(1) / 3 + 2 * J1 / 3 - r * J0 / 3 + r * W / 3;
    s.t1 = J1 / r2 + J1p / r - J0 / r + 1 + J1 - r * J0 + r * W;
    s.t3 = J0 / (3 * r) + J1 / (3 * r2) - T(1) / 3 - J1 / 3 + r * J0 / 3 - r * W / 3;
    s.t5 = 4 * J1 / (15 * r4) + J1p / (15 * r3) - J0 / (45 * r) - J1 / (45 * r2) + T(1) / 45 +
           J1 / 45 - r * J0 / 45 + r * W / 45;
    s.t7 = 6 * J1 / (35 * r6) + J1p / (35 * r5) - 4 * J1 / (525 * r4) - J1p / (525 * r3) +
           J0 / (1575 * r) + J1 / (1575 * r2) - T(1) / 1575 - J1 / 1575 + r * J0 / 1575 -
           r * W / 1575;
    return s;
}

// The eight exterior integrals at k1 for radius A, rho = 2 pi k1 A.
template <class T>
void sin_cos_closed_forms(const T& k1, const Real& A, T (&is)[4], T (&ic)[4]) {
    const Real& pi = pi_real();
    const T r = 2 * pi * k1 * A;
    const Tails<T> s = tails(r);
    const Real tp2 = 4 * pi * pi;
    const T c = tp2 * k1;
    const T c4 = tp2 * tp2 * k1 * k1 * k1;
    const T r2 = r * r, r3 = r2 * r, r4 = r3 * r;
    const Real A3 = A * A * A;
    const T base = 5 * s.j1 / r3 + s.j1p / r2;
    is[0] = c / A * r * s.t3;
    is[1] = c / A3 * r3 * s.t5;
    is[2] = c / A3 * (base - 30 * r3 * s.t7);
    is[3] = -c / A3 * (base - r3 * s.t5 - 30 * r3 * s.t7);
    ic[0] = c * (s.j0 / r - s.t1);
    ic[1] = c4 / 3 * (s.j0 / r3 - s.t3);
    ic[2] = c4 * (-s.j1 / r4 + 4 * s.t5);
    ic[3] = c4 * (s.j0 / (3 * r3) + s.j1 / r4 - s.t3 / 3 - 4 * s.t5);
}

}  // namespace netmoment::detail
