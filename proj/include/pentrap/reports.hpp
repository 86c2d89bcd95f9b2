#pragma once

// Report writers. CSV uses '.' decimals, ',' separators, one header row,
// full round-trip precision.

#include <string>

#include "pentrap/molecule.hpp"
#include "pentrap/simulator.hpp"
#include "pentrap/validity.hpp"

namespace pentrap {

std::string frequencies_csv(const MoleculeSpec& mol);
std::string couplings_csv(const MoleculeSpec& mol);
std::string validity_json(const ValidityReport& report, double threshold);
std::string state_json(const SpinState& state);
std::string probabilities_csv(const SpinState& state);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace pentrap
