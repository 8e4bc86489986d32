#include "netmoment/scene.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace netmoment {

namespace {

void check_component(int n) {
    if (n < 1 || n > 3) {
        throw std::invalid_argument("moment component index must be 1, 2 or 3, got " +
                                    std::to_string(n));
    }
}

double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

double binomial(int n, int k) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

}  // namespace

double MomentVector::operator[](int n) const {
    check_component(n);
    return n == 1 ? m1 : (n == 2 ? m2 : m3);
}

DipoleScene::DipoleScene(std::vector<Dipole> dipoles, double height, UnitSystem units)
    : dipoles_(std::move(dipoles)), height_(height), units_(units) {
    if (!std::isfinite(height_)) throw std::invalid_argument("height must be finite");
    for (std::size_t k = 0; k < dipoles_.size(); ++k) {
        const auto& d = dipoles_[k];
        for (int i = 0; i < 3; ++i) {
            if (!std::isfinite(d.position[i]) || !std::isfinite(d.moment[i])) {
                throw std::invalid_argument("dipole " + std::to_string(k) +
                                            " has a non-finite component");
            }
        }
        if (!(height_ > d.position[2])) {
            throw std::invalid_argument("height must exceed every dipole x3 (dipole " +
                                        std::to_string(k) + ")");
        }
    }
}

double DipoleScene::mu0() const { return units_ == UnitSystem::si ? kMu0Si : 1.0; }

DipoleScene concat(const DipoleScene& a, const DipoleScene& b) {
    if (a.height() != b.height() || a.units() != b.units()) {
        throw std::invalid_argument("concat requires equal height and unit system");
    }
    std::vector<Dipole> all = a.dipoles();
    all.insert(all.end(), b.dipoles().begin(), b.dipoles().end());
    return DipoleScene(std::move(all), a.height(), a.units());
}

DipoleScene four_dipole_scene() {
    const double p = 1e-5, m = 1e-12;
    std::vector<Dipole> d = {
        {{3.5 * p, 3.0 * p, 1.0 * p}, {4.5 * m, 3.5 * m, 1.0 * m}},
        {{0.0 * p, 0.0 * p, 7.0 * p}, {2.5 * m, 4.5 * m, 0.5 * m}},
        {{4.0 * p, -5.5 * p, 11.5 * p}, {-3.0 * m, 2.0 * m, 2.5 * m}},
        {{-4.0 * p, 5.5 * p, 2.5 * p}, {-1.0 * m, 2.0 * m, 1.5 * m}},
    };
    return DipoleScene(std::move(d), 2.5e-4, UnitSystem::si);
}

MomentVector net_moment(const DipoleScene& scene) {
    MomentVector m;
    for (const auto& d : scene.dipoles()) {
        m.m1 += d.moment[0];
        m.m2 += d.moment[1];
        m.m3 += d.moment[2];
    }
    return m;
}

double algebraic_moment(const DipoleScene& scene, int j1, int j2, int j3, int n) {
    check_component(n);
    if (j1 < 0 || j2 < 0 || j3 < 0) throw std::invalid_argument("negative monomial exponent");
    double s = 0.0;
    for (const auto& d : scene.dipoles()) {
        s += ipow(d.position[0], j1) * ipow(d.position[1], j2) * ipow(d.position[2], j3) *
             d.moment[n - 1];
    }
    return s;
}

double height_moment(const DipoleScene& scene, int p, int q, int r, int n) {
    if (p < 0) throw std::invalid_argument("negative height exponent");
    // (h - x3)^p = sum_k C(p,k) h^(p-k) (-x3)^k
    const double h = scene.height();
    double s = 0.0;
    for (int k = 0; k <= p; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        s += binomial(p, k) * ipow(h, p - k) * sign * algebraic_moment(scene, q, r, k, n);
    }
    return s;
}

}  // namespace netmoment
