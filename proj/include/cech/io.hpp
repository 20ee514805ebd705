#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cmap.hpp"
#include "core.hpp"
#include "homology.hpp"
#include "homotopy.hpp"

namespace cech {

using Json = nlohmann::ordered_json;

inline Json space_to_json(const FinSpace& space) {
    Json j;
    j["name"] = space.name();
    j["points"] = space.labels();
    Json closure = Json::object();
    for (int x = 0; x < space.size(); ++x) {
        Json members = Json::array();
        for (int y : space.point_closure(x)) members.push_back(space.label(y));
        closure[space.label(x)] = std::move(members);
    }
    j["closure"] = std::move(closure);
    return j;
}

inline FinSpace space_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("closure"))
        throw IoError("space JSON needs 'points' and 'closure' fields");
    std::vector<std::string> labels = j.at("points").get<std::vector<std::string>>();
    std::vector<std::vector<int>> closures(labels.size());
    auto index_of = [&](const std::string& lbl) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == lbl) return static_cast<int>(i);
        throw IoError("closure mentions unknown point label '" + lbl + "'");
    };
    const Json& cl = j.at("closure");
    if (!cl.is_object()) throw IoError("'closure' must map point labels to label lists");
    for (const auto& [key, members] : cl.items()) {
        int x = index_of(key);
        std::vector<int> c;
        for (const auto& m : members) c.push_back(index_of(m.get<std::string>()));
        closures[static_cast<std::size_t>(x)] = std::move(c);
    }
    std::string name = j.value("name", std::string{});
    try {
        return FinSpace(std::move(closures), std::move(labels), std::move(name));
    } catch (const Error& e) {
        throw IoError(std::string("invalid space: ") + e.what());
    }
}

inline Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed JSON in '" + path.string() + "': " + e.what());
    }
    return j;
}

inline void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

inline FinSpace load_space(const std::filesystem::path& path) {
    return space_from_json(read_json_file(path));
}

inline void save_space(const std::filesystem::path& path, const FinSpace& space) {
    write_json_file(path, space_to_json(space));
}

/// A space given inline as an object or as a path string, resolved relative to
/// the referencing file's directory.
inline FinSpace space_from_json_or_ref(const Json& j, const std::filesystem::path& base_dir) {
    if (j.is_string()) {
        std::filesystem::path ref = j.get<std::string>();
        if (ref.is_relative()) ref = base_dir / ref;
        return load_space(ref);
    }
    return space_from_json(j);
}

inline PointSet point_set_from_labels(const FinSpace& space, const Json& labels) {
    std::vector<int> pts;
    for (const auto& lbl : labels) {
        int x = space.find_label(lbl.get<std::string>());
        if (x == -1) throw IoError("unknown point label '" + lbl.get<std::string>() + "'");
        pts.push_back(x);
    }
    return PointSet(std::move(pts));
}

/// Cover JSON: {"space": <space or file ref>, "sets": {"A": [labels...], ...}}.
inline Cover load_cover(const std::filesystem::path& path) {
    Json j = read_json_file(path);
    if (!j.contains("space") || !j.contains("sets"))
        throw IoError("cover JSON needs 'space' and 'sets' fields");
    Cover cover;
    cover.space = space_from_json_or_ref(j.at("space"), path.parent_path());
    for (const auto& [name, members] : j.at("sets").items())
        cover.sets.emplace_back(name, point_set_from_labels(cover.space, members));
    return cover;
}

/// Map JSON: {"dom": <space or ref>, "cod": <space or ref>, "map": {label: label}}.
inline CMap load_cmap(const std::filesystem::path& path) {
    Json j = read_json_file(path);
    if (!j.contains("dom") || !j.contains("cod") || !j.contains("map"))
        throw IoError("map JSON needs 'dom', 'cod' and 'map' fields");
    FinSpace dom = space_from_json_or_ref(j.at("dom"), path.parent_path());
    FinSpace cod = space_from_json_or_ref(j.at("cod"), path.parent_path());
    std::vector<int> image(static_cast<std::size_t>(dom.size()), -1);
    for (const auto& [from, to] : j.at("map").items()) {
        int x = dom.find_label(from);
        if (x == -1) throw IoError("map mentions unknown domain label '" + from + "'");
        int y = cod.find_label(to.get<std::string>());
        if (y == -1) throw IoError("map mentions unknown codomain label '" + to.get<std::string>() + "'");
        image[static_cast<std::size_t>(x)] = y;
    }
    for (int x = 0; x < dom.size(); ++x)
        if (image[static_cast<std::size_t>(x)] == -1)
            throw IoError("map is not total: no image for '" + dom.label(x) + "'");
    return CMap(std::move(dom), std::move(cod), std::move(image));
}

inline Json homology_to_json(const HomologySummary& h) {
    Json j;
    j["space"] = h.space_name;
    Json degrees = Json::object();
    for (int d = 0; d <= h.max_degree(); ++d) {
        if (h.computed(d)) {
            const DegreeGroup& g = h.group(d);
            Json entry;
            entry["rank"] = g.rank;
            entry["torsion"] = g.torsion;
            degrees[std::to_string(d)] = std::move(entry);
        } else {
            degrees[std::to_string(d)] = "not computed";
        }
    }
    j["degrees"] = std::move(degrees);
    j["reduced"] = h.reduced;
    Json stats;
    stats["simplices_by_dim"] = h.stats.simplices_by_dim;
    stats["built_dim"] = h.stats.built_dim;
    stats["capped"] = h.stats.capped;
    j["complex_stats"] = std::move(stats);
    return j;
}

} // namespace cech
