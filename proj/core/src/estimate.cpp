#include "netmoment/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "netmoment/parallel.hpp"

namespace netmoment {

namespace {

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

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double mu0_of(UnitSystem u) { return u == UnitSystem::si ? kMu0Si : 1.0; }

// Tangential weight polynomial p(u) with w = p(x_j/A) * x_j.
double tangential_poly(int order, double u) {
    const double u2 = u * u, u4 = u2 * u2, u6 = u4 * u2, u8 = u4 * u4, u10 = u8 * u2;
    switch (order) {
        case 1: return 2.0;
        case 2: return 2.0 * (1.0 + 4.0 * u2 / 3.0);
        case 3: return 0.4 * (5.0 + 24.0 * u4);
        case 4: return 2.0 / 105.0 * (105.0 - 2016.0 * u4 + 19200.0 * u6 - 22400.0 * u8);
        case 5:
            return 2.0 / 693.0 * (693.0 - 158400.0 * u6 + 739200.0 * u8 - 677376.0 * u10);
    }
    throw std::invalid_argument("tangential order must be 1..5");
}

// Normal weight polynomial q(u) with w = A * q(x_j/A).
double normal_poly(int order, double u) {
    const double u2 = u * u, u4 = u2 * u2, u6 = u4 * u2, u8 = u4 * u4;
    switch (order) {
        case 2: return 2.0;
        case 3: return 0.25 * (5.0 + 40.0 * u4 - 128.0 * u6);
        case 4: return (35.0 + 1792.0 * u6 - 3200.0 * u8) / 24.0;
    }
    throw std::invalid_argument("normal order must be 2..4");
}

// Integral of x_j^n B3 over the map, x_j selected by axis.
double axis_moment(const FieldMap& map, Axis axis, int n) {
    const int k = axis == Axis::x1 ? 0 : 1;
    return integrate_weighted(map, [k, n](Vec2 x) { return ipow(x[k], n); });
}

struct AxisCoeffs {
    double a1, a4, a5, a5mixed;  // x_j-odd groups for the chosen axis
    double a3along, a3across;
};

AxisCoeffs along(const AsymptCoeffs& c, Axis axis) {
    if (axis == Axis::x1) return {c.a1[0], c.a4[0], c.a5[0], c.a5[3], c.a3[0], c.a3[1]};
    return {c.a1[1], c.a4[1], c.a5[1], c.a5[2], c.a3[1], c.a3[0]};
}

}  // namespace

void validate(const EstimatorSpec& spec) {
    if (spec.component == Component::m3) {
        if (spec.order < 2 || spec.order > 4) {
            throw std::invalid_argument("m3 estimates exist for orders 2..4, got " +
                                        std::to_string(spec.order));
        }
    } else if (spec.order < 1 || spec.order > 5) {
        throw std::invalid_argument("tangential estimates exist for orders 1..5, got " +
                                    std::to_string(spec.order));
    }
}

std::string to_string(const EstimatorSpec& spec) {
    std::string s = spec.component == Component::m1 ? "m1"
                    : spec.component == Component::m2 ? "m2"
                                                       : "m3";
    s += ":" + std::to_string(spec.order);
    if (spec.component == Component::m3) s += spec.axis == Axis::x1 ? ":x1" : ":x2";
    return s;
}

EstimatorSpec parse_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() < 2 || parts.size() > 3) {
        throw std::invalid_argument("spec must look like component:order[:axis], got '" + text + "'");
    }
    EstimatorSpec spec;
    if (parts[0] == "m1") spec.component = Component::m1;
    else if (parts[0] == "m2") spec.component = Component::m2;
    else if (parts[0] == "m3") spec.component = Component::m3;
    else throw std::invalid_argument("unknown component '" + parts[0] + "'");
    try {
        std::size_t used = 0;
        spec.order = std::stoi(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad order '" + parts[1] + "' in spec '" + text + "'");
    }
    if (parts.size() == 3) {
        if (parts[2] == "x1") spec.axis = Axis::x1;
        else if (parts[2] == "x2") spec.axis = Axis::x2;
        else throw std::invalid_argument("unknown axis '" + parts[2] + "'");
    }
    validate(spec);
    return spec;
}

std::vector<EstimatorSpec> all_specs() {
    std::vector<EstimatorSpec> v;
    for (int k = 1; k <= 5; ++k) v.push_back({Component::m1, k, Axis::x1});
    for (int k = 1; k <= 5; ++k) v.push_back({Component::m2, k, Axis::x1});
    v.push_back({Component::m3, 2, Axis::x1});
    for (int k = 3; k <= 4; ++k) {
        v.push_back({Component::m3, k, Axis::x1});
        v.push_back({Component::m3, k, Axis::x2});
    }
    return v;
}

std::function<double(Vec2)> estimator_weight(const EstimatorSpec& spec, double A) {
    validate(spec);
    if (!(A > 0.0)) throw std::invalid_argument("radius A must be positive");
    const int order = spec.order;
    switch (spec.component) {
        case Component::m1:
            return [=](Vec2 x) { return tangential_poly(order, x[0] / A) * x[0]; };
        case Component::m2:
            return [=](Vec2 x) { return tangential_poly(order, x[1] / A) * x[1]; };
        case Component::m3: {
            const int k = spec.axis == Axis::x1 ? 0 : 1;
            return [=](Vec2 x) { return A * normal_poly(order, x[k] / A); };
        }
    }
    throw std::invalid_argument("unknown component");
}

double estimate_moment(const FieldMap& map, const EstimatorSpec& spec) {
    const auto w = estimator_weight(spec, map.grid.radius);
    return integrate_weighted(map, w) / mu0_of(map.units);
}

double DCoefficients::d(int N) const {
    if (N >= 1 && N <= 11 && N % 2 == 1) return odd[(N - 1) / 2];
    if (N >= 2 && N <= 10 && N % 2 == 0) return even[N / 2 - 1];
    throw std::invalid_argument("d index must be 1..11");
}

DCoefficients d_coefficients(const DipoleScene& scene) {
    // Coefficient of k^N in B3hat(k, 0), k > 0: pi z^(N-1)/(N-1)! (m3 + i m1)
    // with z = 2 pi (-H + i x1); expanded binomially into moments <H^p x1^j M_n>.
    auto coeff = [&](int N, bool imag) {
        const int n = N - 1;
        double s = 0.0;
        for (int j = 0; j <= n; ++j) {
            const double c = binomial(n, j) * ((n - j) % 2 == 0 ? 1.0 : -1.0);
            // i^j m3 + i^(j+1) m1
            double part;
            if (imag) {
                part = (j % 2 == 1) ? (((j - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * height_moment(scene, n - j, j, 0, 3)
                                    : ((j / 2) % 2 == 0 ? 1.0 : -1.0) * height_moment(scene, n - j, j, 0, 1);
            } else {
                part = (j % 2 == 0) ? ((j / 2) % 2 == 0 ? 1.0 : -1.0) * height_moment(scene, n - j, j, 0, 3)
                                    : (((j + 1) / 2) % 2 == 0 ? 1.0 : -1.0) * height_moment(scene, n - j, j, 0, 1);
            }
            s += c * part;
        }
        return kPi * ipow(2.0 * kPi, n) / factorial(n) * s * scene.mu0();
    };
    DCoefficients d;
    for (int i = 0; i < 6; ++i) d.odd[i] = coeff(2 * i + 1, true);
    for (int i = 0; i < 5; ++i) d.even[i] = coeff(2 * i + 2, false);
    return d;
}

TQuantities t_quantities(const FieldMap& map, const AsymptCoeffs& coeffs, Axis axis) {
    const double A = map.grid.radius;
    const double pi = kPi;
    const AxisCoeffs c = along(coeffs, axis);
    const double a1t = c.a1 / A;
    const double m3A = -4.0 * pi * coeffs.a0 / A;  // m3/A in field units
    TQuantities t;
    t.t5 = 64.0 / (5 * pi * ipow(A, 4)) * axis_moment(map, axis, 5) - 8.0 / 3.0 * a1t;
    t.t7 = 384.0 / (7 * pi * ipow(A, 6)) * axis_moment(map, axis, 7) - 6.0 * a1t;
    t.t9 = 2560.0 / (21 * pi * ipow(A, 8)) * axis_moment(map, axis, 9) - 60.0 / 7.0 * a1t;
    t.t11 = 64512.0 / (297 * pi * ipow(A, 10)) * axis_moment(map, axis, 11) - 98.0 / 9.0 * a1t;
    t.t0 = -45.0 / pi * axis_moment(map, axis, 0) + 45.0 / (2 * pi) * m3A;
    t.t2 = -180.0 / (pi * A * A) * axis_moment(map, axis, 2) - 45.0 / pi * m3A;
    t.t4 = 360.0 / (pi * ipow(A, 4)) * axis_moment(map, axis, 4) + 45.0 / (2 * pi) * m3A;
    t.t6 = 576.0 / (pi * ipow(A, 6)) * axis_moment(map, axis, 6) + 18.0 / pi * m3A;
    t.t8 = 1152.0 / (7 * pi * ipow(A, 8)) * axis_moment(map, axis, 8) + 45.0 / (14 * pi) * m3A;
    return t;
}

TQuantities t_left_sides(const AsymptCoeffs& coeffs, double A, Axis axis) {
    if (!(A > 0.0)) throw std::invalid_argument("radius A must be positive");
    const AxisCoeffs c = along(coeffs, axis);
    const double A3 = A * A * A;
    const double a4 = c.a4 / A3, a5 = c.a5 / A3, a5m = c.a5mixed / A3;
    const double a2 = coeffs.a2 / A3, a3p = c.a3along / A3, a3q = c.a3across / A3;
    TQuantities t;
    t.t5 = 8 * a4 + 7 * a5 + a5m;
    t.t7 = 10 * a4 + 9 * a5 + a5m;
    t.t9 = 12 * a4 + 11 * a5 + a5m;
    t.t11 = 14 * a4 + 13 * a5 + a5m;
    t.t0 = 30 * a2 + 15 * a3p + 15 * a3q;
    t.t2 = 180 * a2 + 135 * a3p + 45 * a3q;
    t.t4 = 270 * a2 + 225 * a3p + 45 * a3q;
    t.t6 = 120 * a2 + 105 * a3p + 15 * a3q;
    t.t8 = 18 * a2 + 81.0 / 5 * a3p + 9.0 / 5 * a3q;
    return t;
}

bool has_predicted_error(const EstimatorSpec& spec) {
    return (spec.component != Component::m3 && spec.order == 1) ||
           (spec.component == Component::m3 && spec.order == 2);
}

double predicted_leading_error(const DipoleScene& scene, const EstimatorSpec& spec, double A) {
    validate(spec);
    if (!has_predicted_error(spec)) {
        throw std::invalid_argument("no closed leading error for " + to_string(spec));
    }
    if (!(A > 0.0)) throw std::invalid_argument("radius A must be positive");
    const AsymptCoeffs c = asympt_coefficients(scene);
    const double pi = kPi;
    double e;
    if (spec.component == Component::m3) {
        e = 2 * pi / (45 * A * A) * (30 * c.a2 + 15 * c.a3[0] + 15 * c.a3[1]);
    } else {
        const AxisCoeffs a = along(c, spec.component == Component::m1 ? Axis::x1 : Axis::x2);
        e = 2 * pi * (a.a1 / A + (4 * a.a4 + 3 * a.a5 + a.a5mixed) / (12 * A * A * A));
    }
    return e / scene.mu0();
}

RecoveredCoeffs recovered_coefficients(const FieldMap& map) {
    const double A = map.grid.radius;
    const double pi = kPi;
    RecoveredCoeffs r;
    for (int k = 0; k < 2; ++k) {
        const Axis axis = k == 0 ? Axis::x1 : Axis::x2;
        auto S = [&](int n) { return axis_moment(map, axis, n) / ipow(A, n - 1); };
        // int [21/5 u^4 - 36 u^6 + 40 u^8] x B3
        r.a1_order4[k] = -4.0 / pi * (21.0 / 5 * S(5) - 36 * S(7) + 40 * S(9));
        r.a1_order5[k] = 24.0 / pi * (-9 * S(7) + 40 * S(9) - 392.0 / 11 * S(11));
        // 4(T5 - T7) + T9 and 5(T7 - T9) + T11 with the recovered a1/A
        auto T = [&](double a1t, int n) {
            switch (n) {
                case 5: return 64.0 / (5 * pi) * S(5) - 8.0 / 3 * a1t;
                case 7: return 384.0 / (7 * pi) * S(7) - 6.0 * a1t;
                case 9: return 2560.0 / (21 * pi) * S(9) - 60.0 / 7 * a1t;
                default: return 64512.0 / (297 * pi) * S(11) - 98.0 / 9 * a1t;
            }
        };
        const double a4 = r.a1_order4[k], a5 = r.a1_order5[k];
        r.combo_order4[k] = 4 * (T(a4, 5) - T(a4, 7)) + T(a4, 9);
        r.combo_order5[k] = 5 * (T(a5, 7) - T(a5, 9)) + T(a5, 11);
    }
    return r;
}

SweepResult sweep(const DipoleScene& scene, const std::vector<double>& A_values,
                  const std::vector<EstimatorSpec>& specs, const GridParams& grid,
                  const std::optional<NoiseSpec>& noise) {
    for (const auto& s : specs) validate(s);
    for (std::size_t i = 0; i < A_values.size(); ++i) {
        if (!(A_values[i] > 0.0)) throw std::invalid_argument("radii must be positive");
        if (i > 0 && !(A_values[i] > A_values[i - 1])) {
            throw std::invalid_argument("radii must be strictly ascending");
        }
    }
    SweepResult result;
    if (!A_values.empty()) {
        const double margin = asympt_condition_margin(scene, A_values.front());
        if (margin >= 1.0) {
            std::ostringstream msg;
            msg << "asymptoticity condition fails at the smallest radius (margin " << margin << ")";
            result.warnings.push_back(msg.str());
        }
    }
    const MomentVector truth = net_moment(scene);
    // estimates[a][s]
    std::vector<std::vector<double>> est(A_values.size(), std::vector<double>(specs.size()));
    for (std::size_t a = 0; a < A_values.size(); ++a) {
        FieldMap map = sample_field(scene, build_grid(A_values[a], grid.n_radial, grid.n_angular));
        if (noise) {
            NoiseSpec ns = *noise;
            ns.stream = a;
            map = add_noise(map, ns);
        }
        for (std::size_t s = 0; s < specs.size(); ++s) est[a][s] = estimate_moment(map, specs[s]);
    }
    for (std::size_t s = 0; s < specs.size(); ++s) {
        const int comp = static_cast<int>(specs[s].component) + 1;
        for (std::size_t a = 0; a < A_values.size(); ++a) {
            SweepRow row;
            row.A = A_values[a];
            row.spec = specs[s];
            row.estimate = est[a][s];
            row.truth = truth[comp];
            if (has_predicted_error(specs[s])) {
                row.predicted = predicted_leading_error(scene, specs[s], A_values[a]);
            }
            result.rows.push_back(row);
        }
    }
    return result;
}

std::vector<SweepRow> rows_for(const SweepResult& result, const EstimatorSpec& spec) {
    std::vector<SweepRow> v;
    for (const auto& r : result.rows) {
        if (r.spec == spec) v.push_back(r);
    }
    std::sort(v.begin(), v.end(), [](const SweepRow& a, const SweepRow& b) { return a.A < b.A; });
    return v;
}

double convergence_slope(const SweepResult& result, const EstimatorSpec& spec,
                         double top_fraction) {
    if (!(top_fraction > 0.0 && top_fraction <= 1.0)) {
        throw std::invalid_argument("top_fraction must lie in (0, 1]");
    }
    const auto rows = rows_for(result, spec);
    if (rows.empty()) throw std::invalid_argument("no rows for " + to_string(spec));
    const double lo = std::log(rows.front().A), hi = std::log(rows.back().A);
    const double cut = hi - top_fraction * (hi - lo) - 1e-12 * std::max(1.0, std::fabs(hi));
    std::vector<double> xs, ys;
    for (const auto& r : rows) {
        if (std::log(r.A) < cut) continue;
        const double err = std::fabs(r.estimate - r.truth);
        if (!(err > 0.0) || !std::isfinite(err)) {
            throw std::domain_error("zero or non-finite error in slope fit for " + to_string(spec));
        }
        xs.push_back(std::log(r.A));
        ys.push_back(std::log(err));
    }
    if (xs.size() < 4) throw std::invalid_argument("slope fit needs at least 4 rows");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= xs.size();
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (!(sxx > 0.0)) throw std::invalid_argument("slope fit needs distinct radii");
    return sxy / sxx;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2) {
        throw std::invalid_argument("log spacing needs 0 < lo < hi and count >= 2");
    }
    std::vector<double> v(count);
    const double a = std::log(lo), b = std::log(hi);
    for (int i = 0; i < count; ++i) v[i] = std::exp(a + (b - a) * i / (count - 1));
    v.front() = lo;
    v.back() = hi;
    return v;
}

std::vector<double> lin_spaced(double lo, double hi, int count) {
    if (!(hi > lo) || count < 2) throw std::invalid_argument("linear spacing needs lo < hi, count >= 2");
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i) v[i] = lo + (hi - lo) * i / (count - 1);
    return v;
}

}  // namespace netmoment
