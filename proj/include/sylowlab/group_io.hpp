#pragma once

// Group file format (JSON):
//   { "name": string, "degree": int, "generators": [cycle-notation strings] }
// Points are 1-based in files, 0-based internally.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "group.hpp"

namespace sylowlab {

inline FiniteGroup group_from_json(const nlohmann::json& j, std::size_t cap) {
    if (!j.is_object()) throw ParseError("group file: top level must be an object");
    if (!j.contains("name") || !j["name"].is_string())
        throw ParseError("group file: missing string field 'name'");
    if (!j.contains("degree") || !j["degree"].is_number_integer())
        throw ParseError("group file: missing integer field 'degree'");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw ParseError("group file: missing array field 'generators'");
    long long degree = j["degree"].get<long long>();
    if (degree < 1 || degree > 60000) throw ParseError("group file: degree out of range");
    std::vector<Permutation> gens;
    for (const auto& entry : j["generators"]) {
        if (!entry.is_string()) throw ParseError("group file: generators must be strings");
        gens.push_back(parse_permutation(entry.get<std::string>(), static_cast<unsigned>(degree)));
    }
    return FiniteGroup::from_generators(j["name"].get<std::string>(),
                                        static_cast<unsigned>(degree), std::move(gens), cap);
}

inline nlohmann::ordered_json group_to_json(const FiniteGroup& G) {
    nlohmann::ordered_json j;
    j["name"] = G.name();
    j["degree"] = G.degree();
    auto& arr = j["generators"] = nlohmann::ordered_json::array();
    for (const auto& g : G.generators()) arr.push_back(format_permutation(g));
    return j;
}

inline FiniteGroup load_group_file(const std::string& path, std::size_t cap = kDefaultEnumerationCap) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return group_from_json(j, cap);
}

inline void save_group_file(const FiniteGroup& G, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write group file: " + path);
    out << group_to_json(G).dump(2) << "\n";
}

}  // namespace sylowlab
