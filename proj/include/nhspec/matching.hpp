#pragma once

#include "nhspec/deformation.hpp"

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nhspec {

inline constexpr int kDefaultGridPoints = 4096;
inline constexpr int kMaxGridPoints = 1 << 20;
inline constexpr double kDefaultRootTol = 1e-12;

// Relative to theta unless noted.
inline constexpr double kAcceptResidual = 1e-9;
inline constexpr double kTangentialResidual = 1e-10;
inline constexpr double kPairSuspicion = 1e-6;
// Relative to tau.
inline constexpr double kRootMatchDistance = 1e-8;
inline constexpr double kImaginaryTolerance = 1e-9;

/// Find t with f(t) = theta, i.e. the instant at which the deformed quantum
/// equals the canonical quantum 2*pi*theta.
struct MatchQuery {
    DeformationModel model;
    double theta;
    double t_lo;
    double t_hi;
    double tol = kDefaultRootTol;
    int grid_points = kDefaultGridPoints;

    // Window defaults to [-pi*tau, pi*tau].
    static MatchQuery with_default_window(const DeformationModel& model, double theta);
};

enum class Verdict { Accepted, Rejected, OutOfDomain, OutOfWindow };

struct Candidate {
    Family formula;
    std::string branch;
    // false for companions that are not the literal printed expression
    // (opposite radical sign, alternative reading of nested +/-).
    bool printed = true;
    std::complex<double> argument; // argument of the inverse C or S function
    std::optional<double> time;    // empty when the argument is outside the real domain
    Verdict verdict = Verdict::OutOfDomain;
    std::optional<double> residual; // |f(t) - theta|
    std::optional<std::size_t> nearest_root;
    std::optional<double> root_distance;
    bool oracle_agrees = false; // Accepted and within kRootMatchDistance*tau of a root
};

struct NumericRoot {
    double time = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double residual = 0.0;
    bool multiple = false; // touched without a sign change
};

struct MatchingTimeReport {
    MatchQuery query;
    std::vector<Candidate> candidates;
    std::vector<NumericRoot> roots;
    int grid_points_used = 0;
    // A printed candidate was Rejected although the oracle found roots.
    bool formula_defect = false;
    std::vector<std::string> notes;
};

struct PeriodicRoot {
    std::size_t base_index = 0;
    int k = 0;
    double time = 0.0;
    double residual = 0.0;
    bool verified = false;
};

std::vector<Candidate> closed_form_time(const MatchQuery& query);

struct RootScan {
    std::vector<NumericRoot> roots;
    int grid_points_used = 0;
};

RootScan scan_roots(const MatchQuery& query);
std::vector<NumericRoot> numeric_roots(const MatchQuery& query);

MatchingTimeReport validate(const MatchQuery& query);

/// Translates each base root by 2*pi*tau*k, k in [k_lo, k_hi], and re-checks
/// the residual. Only the trigonometric variant is periodic.
std::vector<PeriodicRoot> enumerate_periodic(const MatchQuery& query,
                                             std::span<const NumericRoot> base, int k_lo,
                                             int k_hi);
std::vector<PeriodicRoot> enumerate_periodic(const MatchQuery& query, int k_lo, int k_hi);

std::string_view to_string(Verdict verdict) noexcept;

} // namespace nhspec
