#include "netmoment/quad.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "netmoment/field.hpp"
#include "netmoment/parallel.hpp"

namespace netmoment {

DiskGrid build_grid(double A, int n_radial, int n_angular) {
    if (!(A > 0.0) || !std::isfinite(A)) throw std::invalid_argument("grid radius must be positive");
    if (n_radial < 4) throw std::invalid_argument("n_radial must be at least 4");
    if (n_angular < 8 || n_angular % 2 != 0) {
        throw std::invalid_argument("n_angular must be even and at least 8");
    }
    std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>
        table(gsl_integration_glfixed_table_alloc(n_radial), &gsl_integration_glfixed_table_free);
    if (!table) throw std::runtime_error("Gauss-Legendre table allocation failed");

    DiskGrid g;
    g.radius = A;
    g.n_radial = n_radial;
    g.n_angular = n_angular;
    g.nodes.reserve(static_cast<std::size_t>(n_radial) * n_angular);
    const double dtheta = 2.0 * kPi / n_angular;
    for (int i = 0; i < n_radial; ++i) {
        double r = 0.0, wr = 0.0;
        gsl_integration_glfixed_point(0.0, A, i, &r, &wr, table.get());
        for (int j = 0; j < n_angular; ++j) {
            const double t = j * dtheta;
            g.nodes.push_back({{r * std::cos(t), r * std::sin(t)}, wr * r * dtheta});
        }
    }
    return g;
}

FieldMap sample_field(const DipoleScene& scene, const DiskGrid& grid) {
    FieldMap map;
    map.grid = grid;
    map.units = scene.units();
    map.samples.assign(grid.nodes.size(), 0.0);
    parallel_for(grid.nodes.size(),
                 [&](std::size_t i) { map.samples[i] = b3(scene, grid.nodes[i].x); });
    return map;
}

FieldMap make_field_map(DiskGrid grid, std::vector<double> samples, UnitSystem units) {
    if (samples.size() != grid.nodes.size()) {
        throw std::invalid_argument("sample count " + std::to_string(samples.size()) +
                                    " does not match node count " +
                                    std::to_string(grid.nodes.size()));
    }
    for (double s : samples) {
        if (!std::isfinite(s)) throw std::invalid_argument("field samples must be finite");
    }
    FieldMap map;
    map.grid = std::move(grid);
    map.samples = std::move(samples);
    map.units = units;
    return map;
}

double integrate_weighted(const FieldMap& map, const std::function<double(Vec2)>& weight) {
    const auto& nodes = map.grid.nodes;
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        s += weight(nodes[i].x) * map.samples[i] * nodes[i].weight;
    }
    return s;
}

double integrate(const DiskGrid& grid, const std::function<double(Vec2)>& f) {
    double s = 0.0;
    for (const auto& n : grid.nodes) s += f(n.x) * n.weight;
    return s;
}

}  // namespace netmoment
