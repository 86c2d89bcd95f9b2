#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pentrap/config.hpp"
#include "pentrap/errors.hpp"
#include "pentrap/reports.hpp"
#include "pentrap/schedule_io.hpp"

#include "helpers.hpp"

using namespace pentrap;

namespace {

std::string canonical_config_text() {
    return R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
      "array": {"spacing_mm": 1.0, "count": 10},
      "axial": {"omega_z_mhz": 10.0},
      "pulses": {"chi_hz": 10000.0}
    })";
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("schedule serialization round-trips bit-identically") {
    std::vector<ScheduleEvent> events;
    events.push_back(PulseEvent{0, kPi / 2.0, -kPi / 2.0});
    events.push_back(DelayEvent{1.0 / (4.0 * 23.26254258808297)});
    events.push_back(PulseEvent{1, kPi, 0.1 + 0.2});  // deliberately non-representable
    events.push_back(DelayEvent{1e-300});

    const std::string text = schedule_to_json(events);
    const std::vector<ScheduleEvent> back = schedule_from_json(text);
    REQUIRE(back.size() == events.size());

    const auto& p0 = std::get<PulseEvent>(back[0]);
    CHECK(p0.target == 0);
    CHECK(p0.angle_rad == kPi / 2.0);
    CHECK(p0.phase_rad == -kPi / 2.0);
    CHECK(std::get<DelayEvent>(back[1]).seconds == 1.0 / (4.0 * 23.26254258808297));
    CHECK(std::get<PulseEvent>(back[2]).phase_rad == 0.1 + 0.2);
    CHECK(std::get<DelayEvent>(back[3]).seconds == 1e-300);

    // Serializing the parsed events reproduces the exact same file.
    CHECK(schedule_to_json(back) == text);
}

TEST_CASE("schedule parser rejects malformed input") {
    CHECK_THROWS_AS(schedule_from_json("not json"), ConfigError);
    CHECK_THROWS_AS(schedule_from_json(R"({"type":"pulse"})"), ConfigError);
    CHECK_THROWS_AS(schedule_from_json(R"([{"type":"blink","seconds":1.0}])"), ConfigError);
    CHECK_THROWS_AS(schedule_from_json(R"([{"type":"delay"}])"), ConfigError);
    CHECK_THROWS_AS(
        schedule_from_json(R"([{"type":"delay","seconds":1.0,"extra":2}])"), ConfigError);
    CHECK_THROWS_AS(
        schedule_from_json(R"([{"type":"pulse","target":0,"angle_rad":1.0}])"),
        ConfigError);
    CHECK_THROWS_AS(
        schedule_from_json(
            R"([{"type":"pulse","target":0.5,"angle_rad":1.0,"phase_rad":0.0}])"),
        ConfigError);
    CHECK(schedule_from_json("[]").empty());
}

TEST_CASE("device config parsing and unit conversion") {
    const DeviceConfig cfg = parse_device_config(canonical_config_text());
    CHECK(cfg.magnetic.B0 == 3.58);
    CHECK(cfg.magnetic.b == 50.0);
    REQUIRE(cfg.layout.x.size() == 10);
    CHECK(cfg.layout.x[1] == 1e-3);
    CHECK(cfg.layout.x[9] == 9.0 * 1e-3);  // i * (spacing_mm * 1e-3), not fl(9e-3)
    REQUIRE(cfg.omega_z.has_value());
    CHECK(*cfg.omega_z == 2.0 * kPi * 1e6 * 10.0);
    CHECK(resolve_omega_z(cfg) == 2.0 * kPi * 1e6 * 10.0);
    CHECK(cfg.chi == 2.0 * kPi * 1e4);
    CHECK(cfg.validity_threshold == 0.1);
    CHECK(cfg.j_cutoff_hz == 0.0);
    CHECK(cfg.detection.spin_shift_hz == 10.0);
    CHECK_FALSE(cfg.stack.has_value());

    const MoleculeSpec mol = molecule_from_config(cfg);
    CHECK(mol.size() == 10);
    CHECK(mol.J(0, 1) == doctest::Approx(23.26254258808297).epsilon(1e-12));
}

TEST_CASE("explicit site positions are an alternative to spacing plus count") {
    const DeviceConfig cfg = parse_device_config(R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
      "array": {"site_positions_mm": [0.0, 1.0, 2.5]},
      "axial": {"omega_z_mhz": 10.0},
      "pulses": {"chi_hz": 10000.0}
    })");
    REQUIRE(cfg.layout.x.size() == 3);
    CHECK(cfg.layout.x[2] == 2.5e-3);
}

TEST_CASE("electrode stack configs resolve omega_z through the well") {
    const DeviceConfig cfg = parse_device_config(R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
      "array": {"spacing_mm": 1.0, "count": 2},
      "axial": {"stack": {"radii_mm": [1.0, 2.0, 3.0], "voltages": [-3.0, 10.0, -3.0]}},
      "pulses": {"chi_hz": 10000.0}
    })");
    REQUIRE(cfg.stack.has_value());
    CHECK(cfg.stack->stack.radii[0] == 1e-3);
    CHECK(resolve_omega_z(cfg) == doctest::Approx(631667601.2549092).epsilon(1e-9));
}

TEST_CASE("config rejection catalogue") {
    auto reject = [](const std::string& text) {
        CHECK_THROWS_AS(parse_device_config(text), ConfigError);
    };
    reject("");                       // not JSON
    reject("[1,2,3]");                // not an object
    reject(R"({"magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50}})");  // missing sections

    // Unknown keys anywhere, including nested.
    reject(R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
      "array": {"spacing_mm": 1.0, "count": 2},
      "axial": {"omega_z_mhz": 10.0},
      "pulses": {"chi_hz": 10000.0},
      "surprise": {}
    })");
    reject(R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0, "B1": 1.0},
      "array": {"spacing_mm": 1.0, "count": 2},
      "axial": {"omega_z_mhz": 10.0},
      "pulses": {"chi_hz": 10000.0}
    })");

    // Exactly-one-of rules.
    reject(R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
      "array": {"spacing_mm": 1.0, "count": 2, "site_positions_mm": [0.0, 1.0]},
      "axial": {"omega_z_mhz": 10.0},
      "pulses": {"chi_hz": 10000.0}
    })");
    reject(R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
      "array": {},
      "axial": {"omega_z_mhz": 10.0},
      "pulses": {"chi_hz": 10000.0}
    })");
    reject(R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
      "array": {"spacing_mm": 1.0, "count": 2},
      "axial": {"omega_z_mhz": 10.0,
                "stack": {"radii_mm": [1.0], "voltages": [1.0]}},
      "pulses": {"chi_hz": 10000.0}
    })");
    reject(R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
      "array": {"spacing_mm": 1.0, "count": 2},
      "axial": {},
      "pulses": {"chi_hz": 10000.0}
    })");

    // Value sanity.
    reject(R"({
      "magnetic": {"B0_tesla": -3.58, "gradient_tesla_per_m": 50.0},
      "array": {"spacing_mm": 1.0, "count": 2},
      "axial": {"omega_z_mhz": 10.0},
      "pulses": {"chi_hz": 10000.0}
    })");
    reject(R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
      "array": {"spacing_mm": 1.0, "count": 2.5},
      "axial": {"omega_z_mhz": 10.0},
      "pulses": {"chi_hz": 10000.0}
    })");
    reject(R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
      "array": {"site_positions_mm": [1.0, 1.0]},
      "axial": {"omega_z_mhz": 10.0},
      "pulses": {"chi_hz": 10000.0}
    })");
    reject(R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
      "array": {"spacing_mm": 1.0, "count": 2},
      "axial": {"omega_z_mhz": 10.0},
      "pulses": {"chi_hz": -1.0}
    })");
    reject(R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
      "array": {"spacing_mm": 1.0, "count": 2},
      "axial": {"stack": {"radii_mm": [2.0, 1.0], "voltages": [1.0, 1.0]}},
      "pulses": {"chi_hz": 10000.0}
    })");
    reject(R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
      "array": {"spacing_mm": 1.0, "count": 2},
      "axial": {"omega_z_mhz": 10.0},
      "pulses": {"chi_hz": 10000.0},
      "thresholds": {"validity_ratio": 0.0}
    })");

    // Error messages carry the offending key.
    try {
        parse_device_config(R"({
          "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
          "array": {"spacing_mm": 1.0, "count": 2},
          "axial": {"omega_z_mhz": 10.0},
          "pulses": {"chi_hz": 10000.0, "power_w": 3.0}
        })");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("power_w") != std::string::npos);
    }
}

TEST_CASE("optional sections override their defaults") {
    const DeviceConfig cfg = parse_device_config(R"({
      "magnetic": {"B0_tesla": 3.58, "gradient_tesla_per_m": 50.0},
      "array": {"spacing_mm": 1.0, "count": 2},
      "axial": {"omega_z_mhz": 10.0},
      "pulses": {"chi_hz": 10000.0},
      "detection": {"spin_shift_hz": 20.0, "dip_width_hz": 5.0, "peak_width_hz": 800.0},
      "thresholds": {"validity_ratio": 0.2, "j_cutoff_hz": 1.5}
    })");
    CHECK(cfg.detection.spin_shift_hz == 20.0);
    CHECK(cfg.detection.dip_width_hz == 5.0);
    CHECK(cfg.detection.peak_width_hz == 800.0);
    CHECK(cfg.validity_threshold == 0.2);
    CHECK(cfg.j_cutoff_hz == 1.5);
}

TEST_CASE("frequency report format") {
    const MoleculeSpec mol = testutil::canonical_molecule();
    const std::string csv = frequencies_csv(mol);
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] ==
          "site,x0_m,Bc_T,omega_c0_rad_per_s,omega_m0_rad_per_s,omega_s0_rad_per_s,"
          "omega_z_rad_per_s,epsilon,delta_z_m,dz_omega_s_rad_per_s_per_m");

    // Values round-trip through the decimal text exactly.
    const auto cols = [](const std::string& line) {
        std::vector<std::string> out;
        std::istringstream in(line);
        std::string tok;
        while (std::getline(in, tok, ',')) out.push_back(tok);
        return out;
    };
    const auto row0 = cols(lines[1]);
    REQUIRE(row0.size() == 10);
    CHECK(row0[0] == "0");
    CHECK(std::strtod(row0[6].c_str(), nullptr) == mol.sites[0].omega_z);
    CHECK(std::strtod(row0[7].c_str(), nullptr) == mol.sites[0].epsilon);
    const auto row9 = cols(lines[10]);
    CHECK(std::strtod(row9[1].c_str(), nullptr) == mol.layout.x[9]);
}

TEST_CASE("couplings report format") {
    const MoleculeSpec mol = testutil::canonical_molecule();
    const auto lines = split_lines(couplings_csv(mol));
    REQUIRE(lines.size() == 1 + 45);  // upper triangle of ten sites
    CHECK(lines[0] == "i,j,J_hz,xi_hz");
    CHECK(lines[1].substr(0, 4) == "0,1,");

    const MoleculeSpec single = build_molecule(testutil::canonical_field(),
                                               uniform_layout(1e-3, 1),
                                               2.0 * kPi * 1e7);
    CHECK(couplings_csv(single) == "i,j,J_hz,xi_hz\n");
}

TEST_CASE("state and probability reports") {
    SpinState s = SpinState::basis("10");
    s = apply_pulse(s, 1, kPi / 2.0, 0.0);

    const nlohmann::json j = nlohmann::json::parse(state_json(s));
    CHECK(j.at("n_spins") == 2);
    REQUIRE(j.at("amplitudes").size() == 4);
    CHECK(j.at("amplitudes")[0].at("bitstring") == "00");
    CHECK(j.at("amplitudes")[1].at("bitstring") == "10");
    CHECK(j.at("amplitudes")[1].at("re").get<double>() ==
          s.amplitudes(1).real());
    CHECK(j.at("amplitudes")[3].at("im").get<double>() ==
          s.amplitudes(3).imag());

    const auto lines = split_lines(probabilities_csv(s));
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "bitstring,probability");
    double total = 0.0;
    for (int k = 1; k <= 4; ++k) {
        const auto comma = lines[k].find(',');
        total += std::strtod(lines[k].substr(comma + 1).c_str(), nullptr);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("validity report serialization") {
    const MoleculeSpec mol = testutil::canonical_molecule();
    const ValidityReport rep =
        validity_report(testutil::canonical_field(), mol, 2.0 * kPi * 1e4, {});
    const nlohmann::json j = nlohmann::json::parse(validity_json(rep, 0.1));
    CHECK(j.at("threshold") == 0.1);
    CHECK(j.at("all_pass") == true);
    REQUIRE(j.at("checks").size() == 8);
    const auto& first = j.at("checks")[0];
    CHECK(first.at("name") == "gradient_tilt");
    for (const char* key : {"left", "right", "ratio", "threshold", "strict", "pass"})
        CHECK(first.contains(key));
}

TEST_CASE("text file helpers") {
    const std::string path = "pentrap_io_test.tmp";
    write_text_file(path, "alpha\nbeta\n");
    CHECK(read_text_file(path) == "alpha\nbeta\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_text_file("definitely/not/here.txt"), ConfigError);
}
