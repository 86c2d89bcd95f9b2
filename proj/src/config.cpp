#include "pentrap/config.hpp"

#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "pentrap/constants.hpp"
#include "pentrap/errors.hpp"
#include "pentrap/reports.hpp"

namespace pentrap {

using nlohmann::json;

namespace {

const json& section(const json& root, const char* name) {
    if (!root.contains(name))
        throw ConfigError(std::string("config: missing section \"") + name + "\"");
    const json& s = root.at(name);
    if (!s.is_object())
        throw ConfigError(std::string("config: \"") + name + "\" must be an object");
    return s;
}

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& where) {
    for (const auto& [k, v] : obj.items()) {
        (void)v;
        if (!known.count(k))
            throw ConfigError("config: unknown key \"" + k + "\" in " + where);
    }
}

double number(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key))
        throw ConfigError("config: missing \"" + std::string(key) + "\" in " + where);
    const json& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError("config: \"" + std::string(key) + "\" in " + where +
                          " must be a number");
    return v.get<double>();
}

double number_or(const json& obj, const char* key, const std::string& where, double dflt) {
    return obj.contains(key) ? number(obj, key, where) : dflt;
}

std::vector<double> number_list(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty())
        throw ConfigError("config: " + where + " must be a non-empty array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const json& x : v) {
        if (!x.is_number())
            throw ConfigError("config: " + where + " must contain only numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

StackConfig parse_stack(const json& s) {
    reject_unknown(s, {"radii_mm", "voltages", "tunable", "v_lo", "v_hi",
                       "z_lo_mm", "z_hi_mm"}, "axial.stack");
    StackConfig cfg;
    if (!s.contains("radii_mm") || !s.contains("voltages"))
        throw ConfigError("config: axial.stack needs \"radii_mm\" and \"voltages\"");
    for (double r : number_list(s.at("radii_mm"), "axial.stack.radii_mm"))
        cfg.stack.radii.push_back(r * 1e-3);
    cfg.stack.voltages = number_list(s.at("voltages"), "axial.stack.voltages");
    if (cfg.stack.radii.size() != cfg.stack.voltages.size())
        throw ConfigError("config: axial.stack radii and voltages differ in length");
    for (std::size_t i = 1; i < cfg.stack.radii.size(); ++i)
        if (cfg.stack.radii[i] <= cfg.stack.radii[i - 1])
            throw ConfigError("config: axial.stack radii must be strictly increasing");
    if (cfg.stack.radii.front() <= 0.0)
        throw ConfigError("config: axial.stack radii must be positive");

    if (s.contains("tunable")) {
        const json& t = s.at("tunable");
        if (!t.is_array() || t.empty())
            throw ConfigError("config: axial.stack.tunable must be a non-empty array");
        cfg.tunable.clear();
        for (const json& x : t) {
            if (!x.is_number_integer() || x.get<long>() < 0 ||
                x.get<unsigned long>() >= cfg.stack.voltages.size())
                throw ConfigError("config: axial.stack.tunable indices out of range");
            cfg.tunable.push_back(x.get<std::size_t>());
        }
    }
    cfg.v_lo = number_or(s, "v_lo", "axial.stack", cfg.v_lo);
    cfg.v_hi = number_or(s, "v_hi", "axial.stack", cfg.v_hi);
    if (!(cfg.v_hi > cfg.v_lo))
        throw ConfigError("config: axial.stack needs v_lo < v_hi");
    cfg.z_lo = number_or(s, "z_lo_mm", "axial.stack", 0.0) * 1e-3;
    cfg.z_hi = number_or(s, "z_hi_mm", "axial.stack", 0.0) * 1e-3;
    return cfg;
}

}  // namespace

DeviceConfig parse_device_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config: top level must be an object");
    reject_unknown(root, {"magnetic", "array", "axial", "pulses", "detection",
                          "thresholds"}, "the top level");

    DeviceConfig cfg;

    const json& mag = section(root, "magnetic");
    reject_unknown(mag, {"B0_tesla", "gradient_tesla_per_m"}, "magnetic");
    cfg.magnetic.B0 = number(mag, "B0_tesla", "magnetic");
    cfg.magnetic.b = number(mag, "gradient_tesla_per_m", "magnetic");
    if (!(cfg.magnetic.B0 > 0.0)) throw ConfigError("config: B0_tesla must be positive");
    if (cfg.magnetic.b < 0.0)
        throw ConfigError("config: gradient_tesla_per_m must be non-negative");

    const json& arr = section(root, "array");
    reject_unknown(arr, {"site_positions_mm", "spacing_mm", "count"}, "array");
    const bool has_positions = arr.contains("site_positions_mm");
    const bool has_spacing = arr.contains("spacing_mm") || arr.contains("count");
    if (has_positions == has_spacing)
        throw ConfigError("config: array needs exactly one of site_positions_mm or "
                          "spacing_mm + count");
    if (has_positions) {
        for (double x : number_list(arr.at("site_positions_mm"), "array.site_positions_mm"))
            cfg.layout.x.push_back(x * 1e-3);
        for (std::size_t i = 1; i < cfg.layout.x.size(); ++i)
            if (cfg.layout.x[i] <= cfg.layout.x[i - 1])
                throw ConfigError("config: site_positions_mm must be strictly increasing");
    } else {
        const double spacing = number(arr, "spacing_mm", "array") * 1e-3;
        const double count = number(arr, "count", "array");
        if (count != static_cast<int>(count))
            throw ConfigError("config: array.count must be an integer");
        cfg.layout = uniform_layout(spacing, static_cast<int>(count));
    }

    const json& ax = section(root, "axial");
    reject_unknown(ax, {"omega_z_mhz", "stack"}, "axial");
    if (ax.contains("omega_z_mhz") == ax.contains("stack"))
        throw ConfigError("config: axial needs exactly one of omega_z_mhz or stack");
    if (ax.contains("omega_z_mhz")) {
        const double f = number(ax, "omega_z_mhz", "axial");
        if (!(f > 0.0)) throw ConfigError("config: omega_z_mhz must be positive");
        cfg.omega_z = 2.0 * kPi * 1e6 * f;
    } else {
        if (!ax.at("stack").is_object())
            throw ConfigError("config: axial.stack must be an object");
        cfg.stack = parse_stack(ax.at("stack"));
    }

    const json& pulses = section(root, "pulses");
    reject_unknown(pulses, {"chi_hz"}, "pulses");
    const double chi_hz = number(pulses, "chi_hz", "pulses");
    if (!(chi_hz > 0.0)) throw ConfigError("config: chi_hz must be positive");
    cfg.chi = 2.0 * kPi * chi_hz;

    if (root.contains("detection")) {
        const json& det = section(root, "detection");
        reject_unknown(det, {"spin_shift_hz", "dip_width_hz", "peak_width_hz"}, "detection");
        cfg.detection.spin_shift_hz =
            number_or(det, "spin_shift_hz", "detection", cfg.detection.spin_shift_hz);
        cfg.detection.dip_width_hz =
            number_or(det, "dip_width_hz", "detection", cfg.detection.dip_width_hz);
        cfg.detection.peak_width_hz =
            number_or(det, "peak_width_hz", "detection", cfg.detection.peak_width_hz);
        if (cfg.detection.spin_shift_hz <= 0.0 || cfg.detection.dip_width_hz <= 0.0 ||
            cfg.detection.peak_width_hz <= 0.0)
            throw ConfigError("config: detection widths must be positive");
    }

    if (root.contains("thresholds")) {
        const json& th = section(root, "thresholds");
        reject_unknown(th, {"validity_ratio", "j_cutoff_hz"}, "thresholds");
        cfg.validity_threshold =
            number_or(th, "validity_ratio", "thresholds", cfg.validity_threshold);
        if (!(cfg.validity_threshold > 0.0))
            throw ConfigError("config: validity_ratio must be positive");
        cfg.j_cutoff_hz = number_or(th, "j_cutoff_hz", "thresholds", 0.0);
        if (cfg.j_cutoff_hz < 0.0)
            throw ConfigError("config: j_cutoff_hz must be non-negative");
    }

    return cfg;
}

DeviceConfig load_device_config(const std::string& path) {
    return parse_device_config(read_text_file(path));
}

double resolve_omega_z(const DeviceConfig& cfg, const PhysicalConstants& pc) {
    if (cfg.omega_z) return *cfg.omega_z;
    const StackConfig& sc = *cfg.stack;
    const double z_lo = sc.z_lo > 0.0 ? sc.z_lo : 0.05 * sc.stack.radii.front();
    const double z_hi = sc.z_hi > 0.0 ? sc.z_hi : 5.0 * sc.stack.radii.back();
    return find_well(sc.stack, z_lo, z_hi, pc).omega_z;
}

MoleculeSpec molecule_from_config(const DeviceConfig& cfg, const PhysicalConstants& pc) {
    return build_molecule(cfg.magnetic, cfg.layout, resolve_omega_z(cfg, pc), pc);
}

}  // namespace pentrap
