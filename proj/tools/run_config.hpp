#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nhspec::cli {

// Malformed flags, unknown config keys, missing required values.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TimeGrid {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;

    std::vector<double> points() const;
};

struct RunConfig {
    std::optional<std::string> family;
    std::optional<std::string> variant;
    double kappa = 1.0;
    double tau = 1.0;
    std::optional<double> theta;
    std::optional<double> t;
    std::optional<TimeGrid> t_grid;
    int n_max = 10;
    std::optional<std::pair<double, double>> window;
    int dim = 64;
    double tol = 1e-12;
    int grid_points = 4096;
    std::string output_format = "csv";
    std::optional<std::string> output_path;
    std::optional<std::string> suite;
    std::vector<double> tau_ladder;
    std::optional<std::pair<int, int>> k_range;
    bool canonical = false;
};

// Keys accepted in a JSON config file; anything else is a UsageError.
const std::vector<std::string>& config_keys();

void apply_json(RunConfig& config, const nlohmann::json& doc);
RunConfig load_config_file(const std::string& path);

TimeGrid parse_time_grid(const std::string& spec);          // lo:hi:count
std::pair<double, double> parse_window(const std::string& spec); // lo:hi
std::pair<int, int> parse_k_range(const std::string& spec);      // lo:hi
std::vector<double> parse_list(const std::string& spec);         // a,b,c

} // namespace nhspec::cli
