#pragma once

// Device configuration: JSON with sections magnetic, array, axial, pulses,
// detection, thresholds. Unknown keys are rejected anywhere in the file.
// Exactly one of array.site_positions_mm / array.{spacing_mm,count} and
// exactly one of axial.omega_z_mhz / axial.stack must be present.

#include <optional>
#include <string>

#include "pentrap/molecule.hpp"
#include "pentrap/trap.hpp"
#include "pentrap/validity.hpp"

namespace pentrap {

struct StackConfig {
    ElectrodeStack stack;
    std::vector<std::size_t> tunable;  // optional; defaults to {1} when present
    double v_lo = -40.0;
    double v_hi = 40.0;
    double z_lo = 0.0;  // well search interval, m; derived from radii if zero
    double z_hi = 0.0;
};

struct DeviceConfig {
    MagneticConfig magnetic;
    ArrayLayout layout;
    std::optional<double> omega_z;      // rad/s, when axial.omega_z_mhz given
    std::optional<StackConfig> stack;   // when axial.stack given
    double chi = 0.0;                   // drive Rabi frequency, rad/s
    DetectionConfig detection;
    double validity_threshold = 0.1;
    double j_cutoff_hz = 0.0;           // couplings below this are "uncoupled"
};

DeviceConfig parse_device_config(const std::string& json_text);
DeviceConfig load_device_config(const std::string& path);

// Resolves the axial frequency: either the configured value or the well of
// the configured electrode stack.
double resolve_omega_z(const DeviceConfig& cfg, const PhysicalConstants& pc = codata2018());

MoleculeSpec molecule_from_config(const DeviceConfig& cfg,
                                  const PhysicalConstants& pc = codata2018());

}  // namespace pentrap
