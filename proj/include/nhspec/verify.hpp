#pragma once

#include "nhspec/fock.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nhspec {

struct CaseRecord {
    std::string name;
    bool passed = false;
    double deviation = 0.0;
    double tolerance = 0.0;
};

struct VerificationSummary {
    std::string suite;
    int run = 0;
    int passed = 0;
    double worst_deviation = 0.0; // largest deviation / tolerance over all cases
    std::string worst_case;
    std::vector<CaseRecord> records; // in deterministic generation order

    bool ok() const noexcept { return run == passed; }
    void add(CaseRecord record);
};

enum class Suite { Fock, Parity, Duality, Limits, Matching };

std::optional<Suite> parse_suite(std::string_view name) noexcept;
std::string_view to_string(Suite suite) noexcept;

struct VerifyOptions {
    int dim = kDefaultFockDim;
};

VerificationSummary run_suite(Suite suite, const VerifyOptions& options = {});

VerificationSummary verify_fock(int dim);
VerificationSummary verify_parity();
VerificationSummary verify_duality();
VerificationSummary verify_limits();
VerificationSummary verify_matching();

// Sample times at which fock checks run: t/tau from a fixed list, keeping the
// first five with |f| > 1e-6.
std::vector<double> fock_sample_times(const DeformationModel& model);

// Relative difference with a floor; 0 when both values are 0.
double relative_gap(double a, double b, double floor = 0.0);

} // namespace nhspec
