#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nhspec {

enum class Family { K1 = 1, K2, K3, K4, K5, K6 };

// Plus: hyperbolic time dependence (C = cosh, S = sinh).
// Minus: trigonometric time dependence (C = cos, S = sin).
enum class Variant { Plus, Minus };

enum class Parity { Even, Odd };

inline constexpr std::array<Family, 6> kAllFamilies{
    Family::K1, Family::K2, Family::K3, Family::K4, Family::K5, Family::K6};
inline constexpr std::array<Variant, 2> kAllVariants{Variant::Plus, Variant::Minus};

// Largest |t/tau| accepted for the hyperbolic variant.
inline constexpr double kMaxHyperbolicArgument = 700.0;

/// One noncommutative space-time: [x1, x2] = i f(t) with f fixed by the
/// family, the variant and the two positive parameters.
class DeformationModel {
public:
    DeformationModel(Family family, Variant variant, double kappa, double tau);

    Family family() const noexcept { return family_; }
    Variant variant() const noexcept { return variant_; }
    double kappa() const noexcept { return kappa_; }
    double tau() const noexcept { return tau_; }

    DeformationModel with_family(Family f) const { return {f, variant_, kappa_, tau_}; }
    DeformationModel with_kappa(double k) const { return {family_, variant_, k, tau_}; }
    DeformationModel with_tau(double t) const { return {family_, variant_, kappa_, t}; }

    friend bool operator==(const DeformationModel&, const DeformationModel&) = default;

private:
    Family family_;
    Variant variant_;
    double kappa_;
    double tau_;
};

struct Monomial {
    int degree = 0;
    double coefficient = 0.0;
};

// Leading tau -> infinity polynomial. Every family reduces to one monomial.
struct LimitPolynomial {
    std::vector<Monomial> terms;

    double operator()(double t) const;
};

/// Signed deformation function f(t). Throws Error{Range} when the hyperbolic
/// variant is asked for |t/tau| > kMaxHyperbolicArgument or the result
/// overflows, and Error{InvalidArgument} for non-finite t.
double eval_f(const DeformationModel& model, double t);

/// Signed area quantum 2*pi*f(t).
double eval_quantum(const DeformationModel& model, double t);

Parity parity_class(Family family) noexcept;

// K1 <-> K3, K2 self-dual, no dual for K4..K6.
std::optional<Family> dual_of(Family family) noexcept;

// Evaluates the family's closed form with C -> tau*S and S -> C/tau.
double apply_duality(const DeformationModel& model, double t);

LimitPolynomial galilei_limit_poly(const DeformationModel& model);

inline constexpr int kMaxSeriesOrder = 12;

// Taylor coefficients of f(t) around t = 0, index k holds the t^k term.
std::vector<double> series_expand(const DeformationModel& model, int order);

// Power of tau multiplying each family's prefactor (0, 1, 2, 4, 2, 3).
int tau_power(Family family) noexcept;

std::string_view to_string(Family family) noexcept;
std::string_view to_string(Variant variant) noexcept;
std::string_view to_string(Parity parity) noexcept;
std::optional<Family> parse_family(std::string_view tag) noexcept;
std::optional<Variant> parse_variant(std::string_view tag) noexcept;

} // namespace nhspec
