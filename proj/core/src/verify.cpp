#include "netmoment/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "netmoment/specfun.hpp"

namespace netmoment {

namespace {

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

class Runner {
public:
    explicit Runner(const CheckOptions& o) : opt_(o) {}

    void add(const std::string& name, const std::function<double()>& value,
             const std::function<double()>& reference, double tol, bool relative) {
        if (opt_.filter || !opt_.prefixes.empty()) {
            bool keep = false;
            for (const auto& p : opt_.prefixes) keep = keep || (!p.empty() && starts_with(name, p));
            if (!keep) return;
        }
        CheckResult r;
        r.name = name;
        r.value = value();
        if (!opt_.perturb.empty() && starts_with(name, opt_.perturb)) r.value += opt_.perturb_delta;
        r.reference = reference();
        r.abs_error = std::fabs(r.value - r.reference);
        r.rel_error = r.abs_error / std::max(std::fabs(r.reference), 1e-300);
        r.tolerance = tol;
        r.relative = relative;
        r.pass = (relative ? r.rel_error : r.abs_error) <= tol;
        out_.push_back(r);
    }

    std::vector<CheckResult> take() { return std::move(out_); }

private:
    const CheckOptions& opt_;
    std::vector<CheckResult> out_;
};

const char* trig_name(TrigKind k) {
    switch (k) {
        case TrigKind::cos_odd_cos: return "cos_odd_cos";
        case TrigKind::cos_odd_sin: return "cos_odd_sin";
        case TrigKind::sin_odd_sin: return "sin_odd_sin";
        case TrigKind::sin_even_cos: return "sin_even_cos";
    }
    return "?";
}

}  // namespace

std::vector<double> tail_check_radii() { return {0.3, 1.0, 2.7, 6.5, 15.0, 40.0}; }

std::vector<CheckResult> run_specfun_checks(const CheckOptions& options) {
    Runner run(options);

    for (double x : {0.0, 0.7, 3.1, 11.9, 12.1, 19.9, 20.1, 33.3, 50.0}) {
        run.add("bessel:j0:x=" + fmt("%g", x), [x] { return bessel_j0(x); },
                [x] { return std::cyl_bessel_j(0.0, x); }, 1e-12, false);
        run.add("bessel:j1:x=" + fmt("%g", x), [x] { return bessel_j1(x); },
                [x] { return std::cyl_bessel_j(1.0, x); }, 1e-12, false);
    }

    for (TailKind k : kAllTailKinds) {
        for (double rho : tail_check_radii()) {
            run.add("tail:" + to_string(k) + ":rho=" + fmt("%g", rho),
                    [k, rho] { return tail_integral(k, rho); },
                    [k, rho] { return tail_integral_quadrature(k, rho); }, 1e-8, true);
        }
    }

    static const TailKind odd[4] = {TailKind::j1_over_x1, TailKind::j1_over_x3,
                                    TailKind::j1_over_x5, TailKind::j1_over_x7};
    for (int n = 1; n <= 3; ++n) {
        for (double rho : tail_check_radii()) {
            run.add("recursion:n=" + std::to_string(n) + ":rho=" + fmt("%g", rho),
                    [n, rho] { return tail_integral(odd[n], rho); },
                    [n, rho] { return tail_recursion_rhs(n, rho); }, 1e-10, true);
        }
    }

    std::mt19937_64 rng(20240607);
    std::uniform_real_distribution<double> alpha(0.0, 50.0);
    std::uniform_int_distribution<int> power(0, 4);
    for (TrigKind k : {TrigKind::cos_odd_cos, TrigKind::cos_odd_sin, TrigKind::sin_odd_sin,
                       TrigKind::sin_even_cos}) {
        for (int i = 0; i < 12; ++i) {
            const double a = alpha(rng);
            const int m = power(rng), n = power(rng);
            run.add(std::string("trig:") + trig_name(k) + ":alpha=" + fmt("%.6g", a) +
                        ":m=" + std::to_string(m) + ":n=" + std::to_string(n),
                    [=] { return trig_integral(k, a, m, n); }, [] { return 0.0; }, 1e-12, false);
        }
    }
    return run.take();
}

}  // namespace netmoment
