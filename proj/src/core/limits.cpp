#include "nhspec/limits.hpp"

#include "nhspec/error.hpp"

#include <cmath>

namespace nhspec {

std::vector<double> default_tau_ladder(double t) {
    const double scale = t == 0.0 ? 1.0 : std::abs(t);
    return {10.0 * scale, 20.0 * scale, 40.0 * scale, 80.0 * scale};
}

bool limit_polynomial_matches_series(Family family, Variant variant, double kappa) {
    const DeformationModel probe(family, variant, kappa, 1.0);
    const LimitPolynomial poly = galilei_limit_poly(probe);
    if (poly.terms.size() != 1) return false;
    const Monomial mono = poly.terms.front();

    for (double tau : {1.0, 37.5}) {
        const auto series = series_expand(probe.with_tau(tau), mono.degree);
        for (int k = 0; k < mono.degree; ++k) {
            if (series[k] != 0.0) return false;
        }
        if (std::abs(series[mono.degree] - mono.coefficient) > 1e-12 * std::abs(mono.coefficient)) {
            return false;
        }
    }
    return true;
}

LimitReport limit_report(Family family, Variant variant, double kappa, double t,
                         std::span<const double> taus) {
    if (taus.size() < 2) {
        fail(ErrorCode::InvalidArgument, "tau ladder needs at least two entries");
    }
    LimitReport report{family, variant, kappa, t, {}, {}, {}, std::nullopt, false, false};
    const DeformationModel base(family, variant, kappa, taus.front());
    report.polynomial = galilei_limit_poly(base);
    report.polynomial_confirmed = limit_polynomial_matches_series(family, variant, kappa);

    for (double tau : taus) {
        const DeformationModel m = base.with_tau(tau);
        const double value = eval_f(m, t);
        const double limit = report.polynomial(t);
        report.samples.push_back({tau, value, limit, std::abs(value - limit)});
    }

    report.exact = true;
    for (const auto& s : report.samples) report.exact = report.exact && s.deviation == 0.0;
    for (std::size_t k = 0; k + 1 < report.samples.size(); ++k) {
        const double next = report.samples[k + 1].deviation;
        if (next > 0.0) report.ratios.push_back(report.samples[k].deviation / next);
    }

    // least squares on the samples with a nonzero deviation
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (const auto& s : report.samples) {
        if (s.deviation <= 0.0) continue;
        const double x = std::log(s.tau);
        const double y = std::log(s.deviation);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    const double denom = count * sxx - sx * sx;
    if (count >= 2 && denom > 0.0) {
        report.order = -(count * sxy - sx * sy) / denom;
    }
    return report;
}

} // namespace nhspec
