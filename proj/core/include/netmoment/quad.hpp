#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "netmoment/scene.hpp"

namespace netmoment {

struct GridNode {
    Vec2 x{};
    double weight = 0.0;  // includes the polar Jacobian
};

// Gauss-Legendre in r on [0, A] times a uniform periodic rule in theta.
// Node order: radial index outer, angular index inner.
struct DiskGrid {
    double radius = 0.0;
    int n_radial = 0;
    int n_angular = 0;
    std::vector<GridNode> nodes;
};

struct Provenance {
    bool noisy = false;
    double snr_db = std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0;
};

struct FieldMap {
    DiskGrid grid;
    std::vector<double> samples;  // B3, aligned with grid.nodes
    Provenance provenance;
    UnitSystem units = UnitSystem::natural;
};

inline constexpr int kDefaultRadial = 200;
inline constexpr int kDefaultAngular = 256;

DiskGrid build_grid(double A, int n_radial = kDefaultRadial, int n_angular = kDefaultAngular);

// Clean map of b3 over the grid nodes (data-parallel, order-independent).
FieldMap sample_field(const DipoleScene& scene, const DiskGrid& grid);

// Wraps externally supplied samples; validates sizes and finiteness.
FieldMap make_field_map(DiskGrid grid, std::vector<double> samples, UnitSystem units);

// sum_i weight(x_i) * sample_i * w_i, summed sequentially in node order.
double integrate_weighted(const FieldMap& map, const std::function<double(Vec2)>& weight);

// Plain quadrature of a function over the grid.
double integrate(const DiskGrid& grid, const std::function<double(Vec2)>& f);

}  // namespace netmoment
