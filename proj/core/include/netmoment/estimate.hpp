#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "netmoment/field.hpp"
#include "netmoment/noise.hpp"
#include "netmoment/quad.hpp"

namespace netmoment {

enum class Component { m1, m2, m3 };
enum class Axis { x1, x2 };

// (m1|m2, 1..5) or (m3, 2..4); axis selects the polynomial variable for m3.
struct EstimatorSpec {
    Component component = Component::m1;
    int order = 1;
    Axis axis = Axis::x1;

    friend bool operator==(const EstimatorSpec&, const EstimatorSpec&) = default;
};

void validate(const EstimatorSpec& spec);

// "component:order[:axis]", e.g. "m1:3", "m3:4:x2".
std::string to_string(const EstimatorSpec& spec);
EstimatorSpec parse_spec(const std::string& text);

// Every supported spec; m3 appears once per axis for orders 3 and 4.
std::vector<EstimatorSpec> all_specs();

std::function<double(Vec2)> estimator_weight(const EstimatorSpec& spec, double A);

// (1/mu0) * integral of weight * B3 over the map's disk.
double estimate_moment(const FieldMap& map, const EstimatorSpec& spec);

// Taylor coefficients at k1 = 0+ of Im (odd N) and Re (even N) of the planar
// Fourier transform of B3 along the k1 axis; field units.
struct DCoefficients {
    std::array<double, 6> odd{};   // d1, d3, ..., d11
    std::array<double, 5> even{};  // d2, d4, ..., d10
    double d(int N) const;
};

DCoefficients d_coefficients(const DipoleScene& scene);

// Data-side T expressions (remainders omitted). Odd T use a1/A of the given
// axis; even T use m3 = -4 pi a0. Field units.
struct TQuantities {
    double t5 = 0, t7 = 0, t9 = 0, t11 = 0;
    double t0 = 0, t2 = 0, t4 = 0, t6 = 0, t8 = 0;
};

TQuantities t_quantities(const FieldMap& map, const AsymptCoeffs& coeffs, Axis axis = Axis::x1);

// The same quantities as exact linear combinations of scaled coefficients
// (a1, a4, a5 over A^3 for odd; a2, a3 over A^3 for even).
TQuantities t_left_sides(const AsymptCoeffs& coeffs, double A, Axis axis = Axis::x1);

// Leading error term (truth - estimate) in A m^2 for (m1,1), (m2,1), (m3,2).
double predicted_leading_error(const DipoleScene& scene, const EstimatorSpec& spec, double A);
bool has_predicted_error(const EstimatorSpec& spec);

// Far-field information recovered from data alone, per axis (index 0: x1,
// index 1: x2). a1 entries are a1/A; combos are (4 a4 + 3 a5 + a5')/A^3.
struct RecoveredCoeffs {
    std::array<double, 2> a1_order4{};
    std::array<double, 2> a1_order5{};
    std::array<double, 2> combo_order4{};
    std::array<double, 2> combo_order5{};
};

RecoveredCoeffs recovered_coefficients(const FieldMap& map);

struct GridParams {
    int n_radial = kDefaultRadial;
    int n_angular = kDefaultAngular;
};

struct SweepRow {
    double A = 0.0;
    EstimatorSpec spec;
    double estimate = 0.0;
    double truth = 0.0;
    std::optional<double> predicted;
};

struct SweepResult {
    std::vector<SweepRow> rows;  // ascending A within each spec
    std::vector<std::string> warnings;
};

// Noise for the i-th radius uses stream i of the given seed.
SweepResult sweep(const DipoleScene& scene, const std::vector<double>& A_values,
                  const std::vector<EstimatorSpec>& specs, const GridParams& grid = {},
                  const std::optional<NoiseSpec>& noise = std::nullopt);

// Rows of one spec, in ascending A.
std::vector<SweepRow> rows_for(const SweepResult& result, const EstimatorSpec& spec);

// Least-squares slope of log|estimate - truth| against log A over the rows
// whose A lies in the top `top_fraction` of the spec's log-A range.
double convergence_slope(const SweepResult& result, const EstimatorSpec& spec,
                         double top_fraction);

std::vector<double> log_spaced(double lo, double hi, int count);
std::vector<double> lin_spaced(double lo, double hi, int count);

}  // namespace netmoment
