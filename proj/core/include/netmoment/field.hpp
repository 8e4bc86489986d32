#pragma once

#include <array>

#include "netmoment/scene.hpp"

namespace netmoment {

// Far-field coefficients of B3 on the measurement plane, in field units
// (mu0 included for SI scenes).
struct AsymptCoeffs {
    double a0 = 0.0;
    std::array<double, 2> a1{};
    double a2 = 0.0;
    std::array<double, 3> a3{};
    std::array<double, 2> a4{};
    std::array<double, 4> a5{};
};

// Exact normal field of the scene at (x1, x2, h).
double b3(const DipoleScene& scene, Vec2 x);

AsymptCoeffs asympt_coefficients(const DipoleScene& scene);

// Six-group expansion a0/r^3 + ... + a5-terms/r^9. Throws at the origin.
double b3_asympt(const AsymptCoeffs& c, Vec2 x);

// sup over |x| >= A of the asymptoticity condition; the estimates are
// justified when this is below 1.
double asympt_condition_margin(const DipoleScene& scene, double A);

// Coefficient-wise arithmetic, convenient for superposition and scaling checks.
AsymptCoeffs operator+(const AsymptCoeffs& a, const AsymptCoeffs& b);
AsymptCoeffs operator*(double s, const AsymptCoeffs& a);

}  // namespace netmoment
