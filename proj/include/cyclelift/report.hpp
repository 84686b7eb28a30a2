#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

namespace cyclelift {

// Serial paths are the reference; parallel paths must produce identical reports.
enum class Exec { serial, parallel };

struct Report {
    nlohmann::json params = nlohmann::json::object();
    std::int64_t checked = 0;
    std::vector<nlohmann::json> mismatches;

    bool ok() const { return mismatches.empty(); }
    nlohmann::json to_json() const {
        return {{"params", params}, {"checked", checked}, {"mismatches", mismatches}};
    }
};

}  // namespace cyclelift
