#pragma once

#include <array>
#include <vector>

namespace netmoment {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

enum class UnitSystem { si, natural };

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kMu0Si = 4.0e-7 * kPi;  // N/A^2

struct Dipole {
    Vec3 position{};  // m
    Vec3 moment{};    // A m^2
};

struct MomentVector {
    double m1 = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;

    // n in 1..3
    double operator[](int n) const;
};

// Immutable dipole ensemble measured on the plane x3 = height.
// Construction rejects non-finite data and height <= max x3.
class DipoleScene {
public:
    DipoleScene() = default;
    DipoleScene(std::vector<Dipole> dipoles, double height,
                UnitSystem units = UnitSystem::natural);

    const std::vector<Dipole>& dipoles() const { return dipoles_; }
    double height() const { return height_; }
    UnitSystem units() const { return units_; }

    // 1 in natural units, 4*pi*1e-7 in SI.
    double mu0() const;

private:
    std::vector<Dipole> dipoles_;
    double height_ = 1.0;
    UnitSystem units_ = UnitSystem::natural;
};

// Union of two dipole sets; both scenes must share height and units.
DipoleScene concat(const DipoleScene& a, const DipoleScene& b);

// Four-dipole validation scene: h = 2.5e-4 m, SI units.
DipoleScene four_dipole_scene();

MomentVector net_moment(const DipoleScene& scene);

// <x1^j1 x2^j2 x3^j3 M_n>, n in 1..3.
double algebraic_moment(const DipoleScene& scene, int j1, int j2, int j3, int n);

// <(h - x3)^p x1^q x2^r M_n>, expanded binomially in h over algebraic moments.
double height_moment(const DipoleScene& scene, int p, int q, int r, int n);

}  // namespace netmoment
