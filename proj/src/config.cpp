#include "pinch/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pinch {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for '" + key + "': " + value);
    }
    if (pos != value.size())
        throw std::invalid_argument("config: trailing junk in value for '" + key + "': " + value);
    return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer value for '" + key + "': " + value);
    }
    if (pos != value.size())
        throw std::invalid_argument("config: trailing junk in value for '" + key + "': " + value);
    return v;
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void SystemConfig::validate() const {
    if (n < 1) throw std::invalid_argument("config: n must be >= 1");
    if (!(d > 0.0)) throw std::invalid_argument("config: d must be > 0");
    if (!(height > 0.0)) throw std::invalid_argument("config: D must be > 0");
    if (!(length > 0.0)) throw std::invalid_argument("config: L must be > 0");
    if (!(fc_hz > 0.0)) throw std::invalid_argument("config: fc_hz must be > 0");
    if (!(n_eff >= 1.0)) throw std::invalid_argument("config: n_eff must be >= 1");
    if (!(noise_w > 0.0)) throw std::invalid_argument("config: noise power must be > 0");
    if (!(pt_w > 0.0)) throw std::invalid_argument("config: transmit power must be > 0");
}

double dbm_to_watt(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

double watt_to_dbm(double watt) { return 10.0 * std::log10(watt / 1e-3); }

void apply_override(SystemConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "n") {
        cfg.n = static_cast<int>(parse_u64(key, value));
    } else if (key == "d") {
        cfg.d = parse_double(key, value);
    } else if (key == "D") {
        cfg.height = parse_double(key, value);
    } else if (key == "L") {
        cfg.length = parse_double(key, value);
    } else if (key == "fc_hz") {
        cfg.fc_hz = parse_double(key, value);
    } else if (key == "n_eff") {
        cfg.n_eff = parse_double(key, value);
    } else if (key == "noise_dbm") {
        cfg.noise_w = dbm_to_watt(parse_double(key, value));
    } else if (key == "pt_dbm") {
        cfg.pt_w = dbm_to_watt(parse_double(key, value));
    } else if (key == "seed") {
        cfg.seed = parse_u64(key, value);
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

SystemConfig load_config(std::istream& in) {
    SystemConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not key=value: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " has empty key or value");
        apply_override(cfg, key, value);
    }
    cfg.validate();
    return cfg;
}

SystemConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    return load_config(in);
}

std::string config_snapshot(const SystemConfig& cfg) {
    std::ostringstream os;
    os << "n=" << cfg.n << '\n'
       << "d=" << format_g17(cfg.d) << '\n'
       << "D=" << format_g17(cfg.height) << '\n'
       << "L=" << format_g17(cfg.length) << '\n'
       << "fc_hz=" << format_g17(cfg.fc_hz) << '\n'
       << "n_eff=" << format_g17(cfg.n_eff) << '\n'
       << "noise_dbm=" << format_g17(watt_to_dbm(cfg.noise_w)) << '\n'
       << "pt_dbm=" << format_g17(watt_to_dbm(cfg.pt_w)) << '\n'
       << "seed=" << cfg.seed << '\n';
    return os.str();
}

}  // namespace pinch
