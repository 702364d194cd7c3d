#include "hodge/surface.hpp"

#include "hodge/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hodge {

namespace presets {

SurfaceSpec k3_enriques() {
    EquivHodgeTable::Entries e;
    e[{0, 0}] = {1, 0};
    e[{2, 0}] = {0, 1};
    e[{1, 1}] = {10, 10};
    e[{0, 2}] = {0, 1};
    e[{2, 2}] = {1, 0};
    return {"k3_enriques", EquivHodgeTable(2, std::move(e))};
}

SurfaceSpec enriques() {
    return {"enriques", EquivHodgeTable::trivial(enriques_diamond())};
}

HodgeTable k3() { return k3_enriques().diamond(); }

HodgeTable enriques_diamond() {
    return HodgeTable(2, {{{0, 0}, 1}, {{1, 1}, 10}, {{2, 2}, 1}});
}

std::vector<std::string> names() { return {"enriques", "k3_enriques"}; }

SurfaceSpec by_name(std::string_view name) {
    if (name == "k3_enriques") {
        return k3_enriques();
    }
    if (name == "enriques") {
        return enriques();
    }
    throw ParseError("unknown preset '" + std::string(name) + "'");
}

}  // namespace presets

SurfaceSpec parse_surface_spec(std::string_view json_text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("surface spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("surface spec must be a JSON object");
    }
    auto require = [&](const char* key) -> const json& {
        if (!doc.contains(key)) {
            throw ParseError(std::string("surface spec is missing \"") + key + "\"");
        }
        return doc.at(key);
    };
    const json& name = require("name");
    const json& dimension = require("dimension");
    const json& hodge = require("hodge");
    if (!name.is_string()) {
        throw ParseError("\"name\" must be a string");
    }
    if (!dimension.is_number_integer() || dimension.get<long long>() < 0) {
        throw ParseError("\"dimension\" must be a nonnegative integer");
    }
    if (!hodge.is_array()) {
        throw ParseError("\"hodge\" must be an array");
    }

    const int dim = dimension.get<int>();
    EquivHodgeTable::Entries entries;
    for (const auto& row : hodge) {
        if (!row.is_array() || row.size() != 4) {
            throw ParseError("each \"hodge\" row must be [p, q, d_plus, d_minus]");
        }
        for (const auto& v : row) {
            if (!v.is_number_integer() || v.get<long long>() < 0) {
                throw ParseError("\"hodge\" rows hold nonnegative integers only");
            }
        }
        const Bidegree deg{row[0].get<int>(), row[1].get<int>()};
        if (deg.p > 2 * dim || deg.q > 2 * dim) {
            throw ParseError("\"hodge\" entry outside the range of the given dimension");
        }
        if (entries.count(deg) != 0) {
            throw ParseError("duplicate \"hodge\" entry (" + std::to_string(deg.p) + "," +
                             std::to_string(deg.q) + ")");
        }
        entries[deg] = {BigInt(row[2].get<unsigned long long>()),
                        BigInt(row[3].get<unsigned long long>())};
    }
    return {name.get<std::string>(), EquivHodgeTable(dim, std::move(entries))};
}

SurfaceSpec load_surface_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open surface spec " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_surface_spec(buf.str());
}

}  // namespace hodge
