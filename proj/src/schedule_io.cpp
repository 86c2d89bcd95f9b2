#include "pentrap/schedule_io.hpp"

#include <nlohmann/json.hpp>

#include "pentrap/errors.hpp"
#include "pentrap/reports.hpp"

namespace pentrap {

using nlohmann::json;

namespace {

void require_keys(const json& obj, std::initializer_list<const char*> keys,
                  const std::string& where) {
    for (const char* k : keys)
        if (!obj.contains(k))
            throw ConfigError(where + ": missing key \"" + k + "\"");
    for (const auto& [k, v] : obj.items()) {
        (void)v;
        bool known = false;
        for (const char* want : keys) known = known || k == want;
        if (!known) throw ConfigError(where + ": unknown key \"" + k + "\"");
    }
}

double number_at(const json& obj, const char* key, const std::string& where) {
    const json& v = obj.at(key);
    if (!v.is_number()) throw ConfigError(where + ": \"" + key + "\" must be a number");
    return v.get<double>();
}

}  // namespace

std::string schedule_to_json(const std::vector<ScheduleEvent>& events) {
    json arr = json::array();
    for (const auto& ev : events) {
        json item;
        if (const auto* p = std::get_if<PulseEvent>(&ev)) {
            item["type"] = "pulse";
            item["target"] = p->target;
            item["angle_rad"] = p->angle_rad;
            item["phase_rad"] = p->phase_rad;
        } else {
            const auto& d = std::get<DelayEvent>(ev);
            item["type"] = "delay";
            item["seconds"] = d.seconds;
        }
        arr.push_back(std::move(item));
    }
    return arr.dump(2) + "\n";
}

std::vector<ScheduleEvent> schedule_from_json(const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("schedule JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ConfigError("schedule JSON: top level must be an array");

    std::vector<ScheduleEvent> events;
    events.reserve(arr.size());
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const json& item = arr[k];
        const std::string where = "schedule event " + std::to_string(k);
        if (!item.is_object()) throw ConfigError(where + ": must be an object");
        if (!item.contains("type") || !item.at("type").is_string())
            throw ConfigError(where + ": needs a string \"type\"");
        const std::string type = item.at("type").get<std::string>();
        if (type == "pulse") {
            require_keys(item, {"type", "target", "angle_rad", "phase_rad"}, where);
            if (!item.at("target").is_number_integer())
                throw ConfigError(where + ": \"target\" must be an integer");
            PulseEvent p;
            p.target = item.at("target").get<int>();
            p.angle_rad = number_at(item, "angle_rad", where);
            p.phase_rad = number_at(item, "phase_rad", where);
            events.emplace_back(p);
        } else if (type == "delay") {
            require_keys(item, {"type", "seconds"}, where);
            events.emplace_back(DelayEvent{number_at(item, "seconds", where)});
        } else {
            throw ConfigError(where + ": unknown type \"" + type + "\"");
        }
    }
    return events;
}

void write_schedule_file(const std::string& path, const std::vector<ScheduleEvent>& events) {
    write_text_file(path, schedule_to_json(events));
}

std::vector<ScheduleEvent> read_schedule_file(const std::string& path) {
    return schedule_from_json(read_text_file(path));
}

}  // namespace pentrap
