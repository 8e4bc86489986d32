#include "netmoment/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netmoment {

double b3(const DipoleScene& scene, Vec2 x) {
    const double h = scene.height();
    double s = 0.0;
    for (const auto& d : scene.dipoles()) {
        const double H = h - d.position[2];
        const double u1 = x[0] - d.position[0];
        const double u2 = x[1] - d.position[1];
        const double rho2 = u1 * u1 + u2 * u2;
        const double q = rho2 + H * H;
        const double num = 3.0 * H * (u1 * d.moment[0] + u2 * d.moment[1]) +
                           (2.0 * H * H - rho2) * d.moment[2];
        s += num / (q * q * std::sqrt(q));
    }
    return scene.mu0() / (4.0 * kPi) * s;
}

AsymptCoeffs asympt_coefficients(const DipoleScene& scene) {
    // M(p, q, r, n) = <H^p x1^q x2^r M_n>, H = h - x3
    auto M = [&](int p, int q, int r, int n) { return height_moment(scene, p, q, r, n); };
    const double pi = kPi;
    AsymptCoeffs c;
    c.a0 = -M(0, 0, 0, 3) / (4 * pi);
    c.a1[0] = 3 / (4 * pi) * (M(1, 0, 0, 1) - M(0, 1, 0, 3));
    c.a1[1] = 3 / (4 * pi) * (M(1, 0, 0, 2) - M(0, 0, 1, 3));
    c.a2 = -3 / (8 * pi) *
           (2 * M(1, 1, 0, 1) + 2 * M(1, 0, 1, 2) - 3 * M(2, 0, 0, 3) - M(0, 2, 0, 3) -
            M(0, 0, 2, 3));
    c.a3[0] = 15 / (8 * pi) * (2 * M(1, 1, 0, 1) - M(0, 2, 0, 3));
    c.a3[1] = 15 / (8 * pi) * (2 * M(1, 0, 1, 2) - M(0, 0, 2, 3));
    c.a3[2] = 15 / (4 * pi) * (M(1, 0, 1, 1) + M(1, 1, 0, 2) - M(0, 1, 1, 3));
    c.a4[0] = -15 / (8 * pi) *
              (3 * M(1, 2, 0, 1) + M(1, 0, 2, 1) + M(3, 0, 0, 1) + 2 * M(1, 1, 1, 2) -
               M(0, 3, 0, 3) - M(0, 1, 2, 3) - 3 * M(2, 1, 0, 3));
    c.a4[1] = -15 / (8 * pi) *
              (3 * M(1, 0, 2, 2) + M(1, 2, 0, 2) + M(3, 0, 0, 2) + 2 * M(1, 1, 1, 1) -
               M(0, 0, 3, 3) - M(0, 2, 1, 3) - 3 * M(2, 0, 1, 3));
    c.a5[0] = 35 / (8 * pi) * (3 * M(1, 2, 0, 1) - M(0, 3, 0, 3));
    c.a5[1] = 35 / (8 * pi) * (3 * M(1, 0, 2, 2) - M(0, 0, 3, 3));
    c.a5[2] = 105 / (8 * pi) * (M(1, 2, 0, 2) + 2 * M(1, 1, 1, 1) - M(0, 2, 1, 3));
    c.a5[3] = 105 / (8 * pi) * (M(1, 0, 2, 1) + 2 * M(1, 1, 1, 2) - M(0, 1, 2, 3));
    return scene.mu0() * c;
}

double b3_asympt(const AsymptCoeffs& c, Vec2 x) {
    const double x1 = x[0], x2 = x[1];
    const double r2 = x1 * x1 + x2 * x2;
    if (r2 == 0.0) throw std::domain_error("b3_asympt is singular at the origin");
    const double r = std::sqrt(r2);
    const double r3 = r2 * r, r5 = r3 * r2, r7 = r5 * r2, r9 = r7 * r2;
    return c.a0 / r3 + (c.a1[0] * x1 + c.a1[1] * x2) / r5 + c.a2 / r5 +
           (c.a3[0] * x1 * x1 + c.a3[1] * x2 * x2 + c.a3[2] * x1 * x2) / r7 +
           (c.a4[0] * x1 + c.a4[1] * x2) / r7 +
           (c.a5[0] * x1 * x1 * x1 + c.a5[1] * x2 * x2 * x2 + c.a5[2] * x1 * x1 * x2 +
            c.a5[3] * x1 * x2 * x2) /
               r9;
}

double asympt_condition_margin(const DipoleScene& scene, double A) {
    if (!(A > 0.0)) throw std::invalid_argument("radius A must be positive");
    double sup = 0.0;
    for (const auto& d : scene.dipoles()) {
        const double H = scene.height() - d.position[2];
        const double tp = std::hypot(d.position[0], d.position[1]);
        sup = std::max(sup, (tp * tp + H * H + 2.0 * A * tp) / (A * A));
    }
    return sup;
}

AsymptCoeffs operator+(const AsymptCoeffs& a, const AsymptCoeffs& b) {
    AsymptCoeffs c;
    c.a0 = a.a0 + b.a0;
    c.a2 = a.a2 + b.a2;
    for (int i = 0; i < 2; ++i) c.a1[i] = a.a1[i] + b.a1[i];
    for (int i = 0; i < 3; ++i) c.a3[i] = a.a3[i] + b.a3[i];
    for (int i = 0; i < 2; ++i) c.a4[i] = a.a4[i] + b.a4[i];
    for (int i = 0; i < 4; ++i) c.a5[i] = a.a5[i] + b.a5[i];
    return c;
}

AsymptCoeffs operator*(double s, const AsymptCoeffs& a) {
    AsymptCoeffs c;
    c.a0 = s * a.a0;
    c.a2 = s * a.a2;
    for (int i = 0; i < 2; ++i) c.a1[i] = s * a.a1[i];
    for (int i = 0; i < 3; ++i) c.a3[i] = s * a.a3[i];
    for (int i = 0; i < 2; ++i) c.a4[i] = s * a.a4[i];
    for (int i = 0; i < 4; ++i) c.a5[i] = s * a.a5[i];
    return c;
}

}  // namespace netmoment
