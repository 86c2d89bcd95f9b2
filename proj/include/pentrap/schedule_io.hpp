#pragma once

// Schedule serialization: a JSON array of events,
//   {"type": "pulse", "target": int, "angle_rad": x, "phase_rad": x}
//   {"type": "delay", "seconds": x}
// Doubles round-trip bit-identically through this format.

#include <string>
#include <vector>

#include "pentrap/compiler.hpp"

namespace pentrap {

std::string schedule_to_json(const std::vector<ScheduleEvent>& events);

// Throws ConfigError on malformed input or unknown keys.
std::vector<ScheduleEvent> schedule_from_json(const std::string& text);

void write_schedule_file(const std::string& path, const std::vector<ScheduleEvent>& events);
std::vector<ScheduleEvent> read_schedule_file(const std::string& path);

}  // namespace pentrap
