#include "agcvg/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "agcvg/errors.hpp"

namespace agcvg {

using nlohmann::json;

const char* role_name(Role r) { return r == Role::aerial ? "aerial" : "ground"; }

namespace {

double require_number(const json& j, const std::string& key, const std::string& label) {
    if (!j.contains(key) || !j[key].is_number())
        throw ParseError("missing or non-numeric field: " + label);
    return j[key].get<double>();
}

double require_number(const json& j, const std::string& key) {
    return require_number(j, key, key);
}

VehicleParams parse_vehicle(const json& j, const std::string& field, Role role) {
    if (!j.contains(field) || !j[field].is_object())
        throw ParseError("missing or malformed object: " + field);
    VehicleParams v;
    v.role = role;
    v.footprint_m = require_number(j[field], "footprint_m", field + ".footprint_m");
    v.speed_mps = require_number(j[field], "speed_mps", field + ".speed_mps");
    if (!(v.footprint_m > 0.0)) throw ValidationError(field + ".footprint_m must be positive");
    if (!(v.speed_mps > 0.0)) throw ValidationError(field + ".speed_mps must be positive");
    return v;
}

void validate(const Scenario& sc) {
    const GridMap& m = sc.map;
    auto check_mask = [&](const RegionMask& mask, const char* which) {
        if (mask.cells.size() != m.occupancy().size())
            throw ValidationError(std::string(which) + " region size does not match the grid");
        bool any = false;
        for (int r = 0; r < m.height(); ++r)
            for (int c = 0; c < m.width(); ++c)
                if (mask.at(m, c, r)) {
                    if (m.occupied(c, r))
                        throw ValidationError(std::string(which) + " region marks obstacle cell (col " +
                                              std::to_string(c) + ", row " + std::to_string(r) + ")");
                    any = true;
                }
        if (!any) throw ValidationError(std::string(which) + " region is empty");
    };
    check_mask(sc.aerial_region, "aerial");
    check_mask(sc.ground_region, "ground");
    if (sc.aerial.footprint_m < m.resolution())
        throw ValidationError("aerial.footprint_m below the map resolution");
    if (sc.ground.footprint_m < m.resolution())
        throw ValidationError("ground.footprint_m below the map resolution");
    if (!(sc.energy.endurance_s > 0.0)) throw ValidationError("energy.endurance_s must be positive");
    if (sc.energy.takeoff_s < 0.0) throw ValidationError("energy.takeoff_s must be nonnegative");
    if (sc.energy.landing_s < 0.0) throw ValidationError("energy.landing_s must be nonnegative");
    if (sc.energy.endurance_s <= sc.energy.takeoff_s + sc.energy.landing_s)
        throw ValidationError("energy.endurance_s must exceed takeoff_s + landing_s");
}

}  // namespace

Scenario parse_scenario(const std::string& json_text, const std::string& name) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("scenario root must be an object");

    const double res = require_number(j, "resolution_m");
    if (!(res > 0.0)) throw ValidationError("resolution_m must be positive");

    if (!j.contains("grid") || !j["grid"].is_array() || j["grid"].empty())
        throw ParseError("missing or empty grid");
    const auto& rows = j["grid"];
    const int height = static_cast<int>(rows.size());
    if (!rows[0].is_string()) throw ParseError("grid rows must be strings");
    const int width = static_cast<int>(rows[0].get<std::string>().size());
    if (width == 0) throw ParseError("grid rows must be non-empty strings");

    std::vector<std::uint8_t> occ(static_cast<std::size_t>(width) * height, 0);
    RegionMask aerial_mask{std::vector<std::uint8_t>(occ.size(), 0)};
    RegionMask ground_mask{std::vector<std::uint8_t>(occ.size(), 0)};

    // First grid string is the top row; row 0 of the map is the bottom.
    for (int i = 0; i < height; ++i) {
        if (!rows[i].is_string()) throw ParseError("grid rows must be strings");
        const std::string line = rows[i].get<std::string>();
        if (static_cast<int>(line.size()) != width)
            throw ParseError("grid row " + std::to_string(i) + " has length " +
                             std::to_string(line.size()) + ", expected " + std::to_string(width));
        const int r = height - 1 - i;
        for (int c = 0; c < width; ++c) {
            const std::size_t idx = static_cast<std::size_t>(r) * width + c;
            switch (line[c]) {
                case '.': break;
                case '#': occ[idx] = 1; break;
                case 'A': aerial_mask.cells[idx] = 1; break;
                case 'G': ground_mask.cells[idx] = 1; break;
                case 'B':
                    aerial_mask.cells[idx] = 1;
                    ground_mask.cells[idx] = 1;
                    break;
                default:
                    throw ParseError(std::string("unknown grid character '") + line[c] +
                                     "' at grid row " + std::to_string(i) + ", column " +
                                     std::to_string(c));
            }
        }
    }

    Scenario sc{GridMap(width, height, res, std::move(occ)),
                std::move(aerial_mask),
                std::move(ground_mask),
                parse_vehicle(j, "aerial", Role::aerial),
                parse_vehicle(j, "ground", Role::ground),
                EnergyModel{},
                Point2{},
                name};

    if (!j.contains("energy") || !j["energy"].is_object())
        throw ParseError("missing or malformed object: energy");
    sc.energy.endurance_s = require_number(j["energy"], "endurance_s", "energy.endurance_s");
    sc.energy.takeoff_s = j["energy"].value("takeoff_s", 0.0);
    sc.energy.landing_s = j["energy"].value("landing_s", 0.0);

    if (j.contains("launch_offset_m")) {
        const auto& off = j["launch_offset_m"];
        if (!off.is_array() || off.size() != 2 || !off[0].is_number() || !off[1].is_number())
            throw ParseError("launch_offset_m must be [x, y]");
        sc.launch_offset_m = {off[0].get<double>(), off[1].get<double>()};
    }
    if (name.empty() && j.contains("name") && j["name"].is_string())
        sc.name = j["name"].get<std::string>();

    validate(sc);
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string name = path;
    if (const auto slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    if (name.size() > 5 && name.ends_with(".json")) name.resize(name.size() - 5);
    return parse_scenario(buf.str(), name);
}

std::string scenario_to_json(const Scenario& sc) {
    json j;
    if (!sc.name.empty()) j["name"] = sc.name;
    j["resolution_m"] = sc.map.resolution();
    std::vector<std::string> rows;
    for (int r = sc.map.height() - 1; r >= 0; --r) {
        std::string line(static_cast<std::size_t>(sc.map.width()), '.');
        for (int c = 0; c < sc.map.width(); ++c) {
            const bool a = sc.aerial_region.at(sc.map, c, r);
            const bool g = sc.ground_region.at(sc.map, c, r);
            if (sc.map.occupied(c, r)) line[c] = '#';
            else if (a && g) line[c] = 'B';
            else if (a) line[c] = 'A';
            else if (g) line[c] = 'G';
        }
        rows.push_back(std::move(line));
    }
    j["grid"] = rows;
    j["aerial"] = {{"footprint_m", sc.aerial.footprint_m}, {"speed_mps", sc.aerial.speed_mps}};
    j["ground"] = {{"footprint_m", sc.ground.footprint_m}, {"speed_mps", sc.ground.speed_mps}};
    j["energy"] = {{"endurance_s", sc.energy.endurance_s},
                   {"takeoff_s", sc.energy.takeoff_s},
                   {"landing_s", sc.energy.landing_s}};
    j["launch_offset_m"] = {sc.launch_offset_m.x, sc.launch_offset_m.y};
    return j.dump(2) + "\n";
}

void save_scenario(const Scenario& sc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write scenario file: " + path);
    out << scenario_to_json(sc);
    if (!out) throw IoError("failed writing scenario file: " + path);
}

}  // namespace agcvg
