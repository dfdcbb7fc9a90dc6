#pragma once

#include "nhspec/deformation.hpp"

#include <optional>
#include <span>
#include <vector>

namespace nhspec {

struct LimitSample {
    double tau = 0.0;
    double value = 0.0;     // f(t; tau)
    double limit = 0.0;     // p(t)
    double deviation = 0.0; // |f - p|
};

/// How fast f(t; tau) approaches its tau -> infinity monomial.
struct LimitReport {
    Family family;
    Variant variant;
    double kappa = 0.0;
    double t = 0.0;
    LimitPolynomial polynomial;
    std::vector<LimitSample> samples;
    std::vector<double> ratios; // deviation[k] / deviation[k+1]
    std::optional<double> order; // least-squares slope of -log dev vs log tau
    bool exact = false;          // every deviation is zero
    bool polynomial_confirmed = false;
};

// {10, 20, 40, 80} * |t| (or the bare ladder at t = 0).
std::vector<double> default_tau_ladder(double t);

LimitReport limit_report(Family family, Variant variant, double kappa, double t,
                         std::span<const double> taus);

// Checks the hard-coded monomial against the Taylor series at two values of
// tau: the matching coefficient must be tau independent and all lower ones zero.
bool limit_polynomial_matches_series(Family family, Variant variant, double kappa);

} // namespace nhspec
