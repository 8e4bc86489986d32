#include <gsl/gsl_sum.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "netmoment/specfun.hpp"

namespace netmoment {

namespace {

struct Integrand {
    int order;  // Bessel order
    int power;  // divide by x^power
};

Integrand integrand_of(TailKind kind) {
    switch (kind) {
        case TailKind::j1_over_x1: return {1, 1};
        case TailKind::j1_over_x3: return {1, 3};
        case TailKind::j1_over_x5: return {1, 5};
        case TailKind::j1_over_x7: return {1, 7};
        case TailKind::j0_over_x2: return {0, 2};
        case TailKind::j0_total: return {0, 0};
        case TailKind::j2_total: return {2, 0};
        case TailKind::j2_over_x2: return {2, 2};
    }
    throw std::invalid_argument("unknown tail kind");
}

// Panels between zeros are smooth; only the head panel near a small rho
// needs deep subdivision.
double panel(const Integrand& f, double a, double b, unsigned depth) {
    auto g = [&](double x) { return std::cyl_bessel_j(f.order, x) / std::pow(x, f.power); };
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, a, b, depth, 1e-13);
}

double levin_sum(const std::vector<double>& terms, double& err) {
    gsl_sum_levin_u_workspace* w = gsl_sum_levin_u_alloc(terms.size());
    double sum = 0.0;
    gsl_sum_levin_u_accel(terms.data(), terms.size(), w, &sum, &err);
    gsl_sum_levin_u_free(w);
    return sum;
}

}  // namespace

double tail_integral_quadrature(TailKind kind, double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("tail integral needs rho > 0");
    const Integrand f = integrand_of(kind);

    // first zero of J_order beyond rho
    unsigned m = 1;
    while (boost::math::cyl_bessel_j_zero<double>(f.order, m) <= rho) ++m;

    double z = boost::math::cyl_bessel_j_zero<double>(f.order, m);
    const double head = panel(f, rho, z, 8);

    std::vector<double> terms;
    double best = 0.0, prev = 0.0;
    for (int block = 0; block < 6; ++block) {
        for (int i = 0; i < 16; ++i) {
            const double z2 = boost::math::cyl_bessel_j_zero<double>(f.order, ++m);
            terms.push_back(panel(f, z, z2, 4));
            z = z2;
        }
        double err = 0.0;
        best = levin_sum(terms, err);
        const double total = std::fabs(head + best);
        if (block > 0 && std::fabs(best - prev) <= 1e-14 * std::max(total, 1e-300)) break;
        prev = best;
    }
    return head + best;
}

}  // namespace netmoment
