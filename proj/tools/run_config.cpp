#include "run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace nhspec::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

double to_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("cannot parse " + what + " from '" + s + "'");
    }
}

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("cannot parse " + what + " from '" + s + "'");
    }
}

template <typename T>
T get_as(const nlohmann::json& v, const std::string& key) {
    try {
        return v.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw UsageError("config key '" + key + "' has the wrong type");
    }
}

} // namespace

std::vector<double> TimeGrid::points() const {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) {
        out[i] = count == 1 ? lo : (i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1));
    }
    return out;
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys{
        "family", "variant", "kappa",         "tau",         "theta", "t",          "t_grid",
        "n_max",  "window",  "dim",           "tol",         "grid_points", "output_format",
        "output_path", "suite", "tau_ladder", "k_range",     "canonical"};
    return keys;
}

TimeGrid parse_time_grid(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw UsageError("time grid must be lo:hi:count, got '" + spec + "'");
    TimeGrid g{to_double(parts[0], "grid lo"), to_double(parts[1], "grid hi"),
               to_int(parts[2], "grid count")};
    if (g.count < 1) throw UsageError("time grid count must be >= 1");
    if (g.count > 1 && !(g.lo < g.hi)) throw UsageError("time grid needs lo < hi");
    return g;
}

std::pair<double, double> parse_window(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 2) throw UsageError("window must be lo:hi, got '" + spec + "'");
    return {to_double(parts[0], "window lo"), to_double(parts[1], "window hi")};
}

std::pair<int, int> parse_k_range(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 2) throw UsageError("k range must be lo:hi, got '" + spec + "'");
    return {to_int(parts[0], "k lo"), to_int(parts[1], "k hi")};
}

std::vector<double> parse_list(const std::string& spec) {
    std::vector<double> out;
    for (const auto& p : split(spec, ',')) out.push_back(to_double(p, "list entry"));
    if (out.empty()) throw UsageError("empty list");
    return out;
}

void apply_json(RunConfig& c, const nlohmann::json& doc) {
    if (!doc.is_object()) throw UsageError("config must be a JSON object");
    const auto& keys = config_keys();
    for (const auto& [key, value] : doc.items()) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw UsageError("unknown config key '" + key + "'");
        }
        if (key == "family") c.family = get_as<std::string>(value, key);
        else if (key == "variant") c.variant = get_as<std::string>(value, key);
        else if (key == "kappa") c.kappa = get_as<double>(value, key);
        else if (key == "tau") c.tau = get_as<double>(value, key);
        else if (key == "theta") c.theta = get_as<double>(value, key);
        else if (key == "t") c.t = get_as<double>(value, key);
        else if (key == "t_grid") c.t_grid = parse_time_grid(get_as<std::string>(value, key));
        else if (key == "n_max") c.n_max = get_as<int>(value, key);
        else if (key == "window") {
            if (value.is_string()) {
                c.window = parse_window(value.get<std::string>());
            } else {
                const auto w = get_as<std::vector<double>>(value, key);
                if (w.size() != 2) throw UsageError("window must have two entries");
                c.window = std::pair{w[0], w[1]};
            }
        }
        else if (key == "dim") c.dim = get_as<int>(value, key);
        else if (key == "tol") c.tol = get_as<double>(value, key);
        else if (key == "grid_points") c.grid_points = get_as<int>(value, key);
        else if (key == "output_format") c.output_format = get_as<std::string>(value, key);
        else if (key == "output_path") c.output_path = get_as<std::string>(value, key);
        else if (key == "suite") c.suite = get_as<std::string>(value, key);
        else if (key == "tau_ladder") c.tau_ladder = get_as<std::vector<double>>(value, key);
        else if (key == "k_range") c.k_range = parse_k_range(get_as<std::string>(value, key));
        else if (key == "canonical") c.canonical = get_as<bool>(value, key);
    }
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    RunConfig c;
    apply_json(c, doc);
    return c;
}

} // namespace nhspec::cli
