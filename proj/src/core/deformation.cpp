#include "nhspec/deformation.hpp"

#include "nhspec/error.hpp"

#include <cmath>
#include <sstream>

namespace nhspec {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << name << " must be finite and > 0, got " << value;
        fail(ErrorCode::InvalidArgument, msg.str());
    }
}

struct Trig {
    double c;         // C(t/tau)
    double s;         // S(t/tau)
    double c_minus_1; // C(t/tau) - 1 without cancellation near t = 0
};

Trig trig_values(const DeformationModel& model, double t) {
    if (!std::isfinite(t)) {
        fail(ErrorCode::InvalidArgument, "time must be finite");
    }
    const double u = t / model.tau();
    if (model.variant() == Variant::Plus) {
        if (std::abs(u) > kMaxHyperbolicArgument) {
            std::ostringstream msg;
            msg << "|t/tau| = " << std::abs(u) << " exceeds " << kMaxHyperbolicArgument
                << " for the hyperbolic variant";
            fail(ErrorCode::Range, msg.str());
        }
        const double sh = std::sinh(0.5 * u);
        return {std::cosh(u), std::sinh(u), 2.0 * sh * sh};
    }
    const double sn = std::sin(0.5 * u);
    return {std::cos(u), std::sin(u), -2.0 * sn * sn};
}

double sign_of(Variant v) { return v == Variant::Plus ? 1.0 : -1.0; }

// Closed forms for the three dualisable families, written in terms of
// arbitrary (C, S) so the duality substitution can reuse them.
double dualisable_form(Family family, double kappa, double tau, double c, double s) {
    switch (family) {
    case Family::K1: return kappa * c * c;
    case Family::K2: return kappa * tau * c * s;
    case Family::K3: return kappa * tau * tau * s * s;
    default: break;
    }
    fail(ErrorCode::UnsupportedFamily, "duality is defined only for k1, k2 and k3");
}

double checked(double value) {
    if (!std::isfinite(value)) {
        fail(ErrorCode::Range, "deformation function overflowed");
    }
    return value;
}

// Coefficients of C(u) and S(u) in powers of u up to `order`.
std::vector<double> c_series(Variant v, int order) {
    std::vector<double> out(order + 1, 0.0);
    double fact = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) fact *= k;
        if (k % 2 == 0) {
            const double sgn = (v == Variant::Minus && (k / 2) % 2 == 1) ? -1.0 : 1.0;
            out[k] = sgn / fact;
        }
    }
    return out;
}

std::vector<double> s_series(Variant v, int order) {
    std::vector<double> out(order + 1, 0.0);
    double fact = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) fact *= k;
        if (k % 2 == 1) {
            const double sgn = (v == Variant::Minus && (k / 2) % 2 == 1) ? -1.0 : 1.0;
            out[k] = sgn / fact;
        }
    }
    return out;
}

std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; i + j < out.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

} // namespace

DeformationModel::DeformationModel(Family family, Variant variant, double kappa, double tau)
    : family_(family), variant_(variant), kappa_(kappa), tau_(tau) {
    require_positive(kappa, "kappa");
    require_positive(tau, "tau");
}

double LimitPolynomial::operator()(double t) const {
    double acc = 0.0;
    for (const auto& m : terms) {
        acc += m.coefficient * std::pow(t, m.degree);
    }
    return acc;
}

int tau_power(Family family) noexcept {
    switch (family) {
    case Family::K1: return 0;
    case Family::K2: return 1;
    case Family::K3: return 2;
    case Family::K4: return 4;
    case Family::K5: return 2;
    case Family::K6: return 3;
    }
    return 0;
}

double eval_f(const DeformationModel& model, double t) {
    const Trig tr = trig_values(model, t);
    const double kappa = model.kappa();
    const double tau = model.tau();
    const double pm = sign_of(model.variant());
    switch (model.family()) {
    case Family::K1:
    case Family::K2:
    case Family::K3:
        return checked(dualisable_form(model.family(), kappa, tau, tr.c, tr.s));
    case Family::K4: {
        const double tau4 = tau * tau * tau * tau;
        return checked(4.0 * kappa * tau4 * tr.c_minus_1 * tr.c_minus_1);
    }
    case Family::K5:
        return checked(pm * kappa * tau * tau * tr.c_minus_1 * tr.c);
    case Family::K6:
        return checked(pm * kappa * tau * tau * tau * tr.c_minus_1 * tr.s);
    }
    fail(ErrorCode::InvalidArgument, "unknown family");
}

double eval_quantum(const DeformationModel& model, double t) {
    return checked(2.0 * M_PI * eval_f(model, t));
}

Parity parity_class(Family family) noexcept {
    return (family == Family::K2 || family == Family::K6) ? Parity::Odd : Parity::Even;
}

std::optional<Family> dual_of(Family family) noexcept {
    switch (family) {
    case Family::K1: return Family::K3;
    case Family::K2: return Family::K2;
    case Family::K3: return Family::K1;
    default: return std::nullopt;
    }
}

double apply_duality(const DeformationModel& model, double t) {
    if (!dual_of(model.family())) {
        fail(ErrorCode::UnsupportedFamily, "duality is defined only for k1, k2 and k3");
    }
    const Trig tr = trig_values(model, t);
    const double tau = model.tau();
    return checked(dualisable_form(model.family(), model.kappa(), tau, tau * tr.s, tr.c / tau));
}

LimitPolynomial galilei_limit_poly(const DeformationModel& model) {
    const double k = model.kappa();
    switch (model.family()) {
    case Family::K1: return {{{0, k}}};
    case Family::K2: return {{{1, k}}};
    case Family::K3: return {{{2, k}}};
    case Family::K4: return {{{4, k}}};
    case Family::K5: return {{{2, 0.5 * k}}};
    case Family::K6: return {{{3, 0.5 * k}}};
    }
    return {};
}

std::vector<double> series_expand(const DeformationModel& model, int order) {
    if (order < 0 || order > kMaxSeriesOrder) {
        std::ostringstream msg;
        msg << "series order must be in [0, " << kMaxSeriesOrder << "], got " << order;
        fail(ErrorCode::InvalidArgument, msg.str());
    }
    const Variant v = model.variant();
    const auto c = c_series(v, order);
    const auto s = s_series(v, order);
    auto c_minus_1 = c;
    c_minus_1[0] -= 1.0;

    std::vector<double> in_u;
    double prefactor = model.kappa() * std::pow(model.tau(), tau_power(model.family()));
    switch (model.family()) {
    case Family::K1: in_u = multiply(c, c); break;
    case Family::K2: in_u = multiply(c, s); break;
    case Family::K3: in_u = multiply(s, s); break;
    case Family::K4:
        in_u = multiply(c_minus_1, c_minus_1);
        prefactor *= 4.0;
        break;
    case Family::K5:
        in_u = multiply(c_minus_1, c);
        prefactor *= sign_of(v);
        break;
    case Family::K6:
        in_u = multiply(c_minus_1, s);
        prefactor *= sign_of(v);
        break;
    }

    // u = t / tau
    std::vector<double> out(order + 1, 0.0);
    double scale = 1.0;
    for (int k = 0; k <= order; ++k) {
        out[k] = prefactor * in_u[k] * scale;
        scale /= model.tau();
    }
    return out;
}

std::string_view to_string(Family family) noexcept {
    switch (family) {
    case Family::K1: return "k1";
    case Family::K2: return "k2";
    case Family::K3: return "k3";
    case Family::K4: return "k4";
    case Family::K5: return "k5";
    case Family::K6: return "k6";
    }
    return "?";
}

std::string_view to_string(Variant variant) noexcept {
    return variant == Variant::Plus ? "plus" : "minus";
}

std::string_view to_string(Parity parity) noexcept {
    return parity == Parity::Even ? "even" : "odd";
}

std::optional<Family> parse_family(std::string_view tag) noexcept {
    for (Family f : kAllFamilies) {
        if (to_string(f) == tag) return f;
    }
    return std::nullopt;
}

std::optional<Variant> parse_variant(std::string_view tag) noexcept {
    if (tag == "plus") return Variant::Plus;
    if (tag == "minus") return Variant::Minus;
    return std::nullopt;
}

} // namespace nhspec
