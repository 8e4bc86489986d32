#pragma once

// Independent reference implementations shared by the tests. Nothing here
// calls the library's numerical code.

#include <array>
#include <cmath>
#include <vector>

namespace oracle {

inline constexpr double pi = 3.141592653589793238462643383279502884;

struct PointDipole {
    std::array<double, 3> t;  // position
    std::array<double, 3> m;  // moment
};

// Vertical component of mu0/(4 pi) (3 (m.r) r / |r|^5 - m / |r|^3) at (x1, x2, h).
inline double dipole_b3(const std::vector<PointDipole>& ds, double x1, double x2, double h,
                        double mu0) {
    double s = 0.0;
    for (const auto& d : ds) {
        const double r[3] = {x1 - d.t[0], x2 - d.t[1], h - d.t[2]};
        const double r2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
        const double rn = std::sqrt(r2);
        const double mr = d.m[0] * r[0] + d.m[1] * r[1] + d.m[2] * r[2];
        s += 3.0 * mr * r[2] / (r2 * r2 * rn) - d.m[2] / (r2 * rn);
    }
    return mu0 / (4.0 * pi) * s;
}

// sum_k t1^j1 t2^j2 t3^j3 m_n, straight from the point-sum definition.
inline double point_moment(const std::vector<PointDipole>& ds, int j1, int j2, int j3, int n) {
    double s = 0.0;
    for (const auto& d : ds) {
        s += std::pow(d.t[0], j1) * std::pow(d.t[1], j2) * std::pow(d.t[2], j3) * d.m[n - 1];
    }
    return s;
}

// Polar Gauss-Legendre x trapezoid quadrature of f over the disk of radius A,
// nodes by Newton iteration on the Legendre polynomial.
template <class F>
double disk_integral(F&& f, double A, int nr, int nt) {
    std::vector<double> x(nr), w(nr);
    for (int i = 0; i < nr; ++i) {
        double z = std::cos(pi * (i + 0.75) / (nr + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= nr; ++k) {
                const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = nr * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::fabs(dz) < 1e-16) {
                w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
                break;
            }
        }
        x[i] = z;
    }
    double s = 0.0;
    for (int i = 0; i < nr; ++i) {
        const double r = 0.5 * A * (x[i] + 1.0);
        double ring = 0.0;
        for (int j = 0; j < nt; ++j) {
            const double th = 2.0 * pi * j / nt;
            ring += f(r * std::cos(th), r * std::sin(th));
        }
        s += 0.5 * A * w[i] * r * ring * (2.0 * pi / nt);
    }
    return s;
}

// Least-squares slope of log|y| against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double mx = 0, my = 0;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(x[i]);
        my += std::log(std::fabs(y[i]));
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(x[i]) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(std::fabs(y[i])) - my);
    }
    return sxy / sxx;
}

}  // namespace oracle
