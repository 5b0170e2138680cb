#include "blowup/scene_io.hpp"

#include <algorithm>
#include <set>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

const Json& require(const Json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError(where + ": missing key '" + key + "'");
    return *it;
}

std::string require_string(const Json& v, const std::string& where) {
    if (!v.is_string()) throw InputError(where + ": expected a string");
    return v.get<std::string>();
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw InputError(where + ": unknown key '" + key + "'");
    }
}

Field parse_field(const Json& v) {
    if (!v.is_object()) throw InputError("field: expected an object");
    reject_unknown(v, {"kind", "p"}, "field");
    const std::string kind = require_string(require(v, "kind", "field"), "field.kind");
    if (kind == "rational") {
        if (v.contains("p")) throw InputError("field: 'p' given for the rational field");
        return Field::rational();
    }
    if (kind == "prime") {
        const Json& p = require(v, "p", "field");
        if (!p.is_number_integer()) throw InputError("field.p: expected an integer");
        const auto value = p.get<long long>();
        if (value < 2 || value >= (1LL << 31)) throw InputError("field.p: must be a prime below 2^31");
        return Field::prime(static_cast<std::uint32_t>(value));
    }
    throw InputError("field.kind: expected 'rational' or 'prime', got '" + kind + "'");
}

}  // namespace

SceneFile scene_file_from_json(const Json& doc) {
    if (!doc.is_object()) throw InputError("scene: expected a JSON object");
    reject_unknown(doc, {"schema", "field", "variables", "hypersurface", "centers"}, "scene");
    const std::string schema = require_string(require(doc, "schema", "scene"), "schema");
    if (schema != kSceneSchema)
        throw InputError("schema: expected '" + std::string(kSceneSchema) + "', got '" + schema + "'");

    SceneFile out;
    out.field = doc.contains("field") ? parse_field(doc["field"]) : Field::rational();

    const Json& vars = require(doc, "variables", "scene");
    if (!vars.is_array() || vars.empty()) throw InputError("variables: expected a nonempty array");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        auto name = require_string(v, "variables");
        if (!is_identifier(name)) throw InputError("variables: '" + name + "' is not an identifier");
        if (!seen.insert(name).second) throw InputError("variables: duplicate name '" + name + "'");
        out.variables.push_back(std::move(name));
    }

    out.hypersurface = require_string(require(doc, "hypersurface", "scene"), "hypersurface");

    const Json& centers = require(doc, "centers", "scene");
    if (!centers.is_array()) throw InputError("centers: expected an array");
    std::set<std::string> names;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const std::string where = "centers[" + std::to_string(i) + "]";
        const Json& c = centers[i];
        if (!c.is_object()) throw InputError(where + ": expected an object");
        reject_unknown(c, {"name", "vanishing", "at"}, where);
        CenterSpec spec;
        spec.name = require_string(require(c, "name", where), where + ".name");
        if (!is_identifier(spec.name)) throw InputError(where + ".name: '" + spec.name + "' is not an identifier");
        if (!names.insert(spec.name).second) throw InputError(where + ".name: duplicate center name '" + spec.name + "'");
        const Json& van = require(c, "vanishing", where);
        if (!van.is_array() || van.empty()) throw InputError(where + ".vanishing: expected a nonempty array");
        for (const auto& v : van) {
            auto name = require_string(v, where + ".vanishing");
            if (!seen.count(name)) throw InputError(where + ".vanishing: unknown variable '" + name + "'");
            if (std::find(spec.vanishing.begin(), spec.vanishing.end(), name) != spec.vanishing.end())
                throw InputError(where + ".vanishing: '" + name + "' listed twice");
            spec.vanishing.push_back(std::move(name));
        }
        if (c.contains("at")) {
            const Json& at = c["at"];
            if (!at.is_object()) throw InputError(where + ".at: expected an object");
            for (const auto& [key, value] : at.items()) {
                if (std::find(spec.vanishing.begin(), spec.vanishing.end(), key) == spec.vanishing.end())
                    throw InputError(where + ".at: '" + key + "' is not a vanishing variable");
                if (value.is_number_integer())
                    spec.at[key] = std::to_string(value.get<long long>());
                else
                    spec.at[key] = require_string(value, where + ".at." + key);
            }
        }
        out.centers.push_back(std::move(spec));
    }
    return out;
}

SceneFile parse_scene_file(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("scene file is not valid JSON: ") + e.what());
    }
    return scene_file_from_json(doc);
}

Scene build_scene(const SceneFile& file, const GroebnerOptions& options) {
    Ring ring{file.field, file.variables};
    Polynomial f = ring.parse(file.hypersurface);
    std::vector<Center> centers;
    for (const auto& spec : file.centers) {
        Center c;
        c.name = spec.name;
        for (const auto& v : spec.vanishing) {
            const auto idx = static_cast<std::size_t>(
                std::find(file.variables.begin(), file.variables.end(), v) - file.variables.begin());
            c.vanishing.push_back(idx);
            auto it = spec.at.find(v);
            if (it == spec.at.end()) {
                c.offsets.push_back(Scalar::zero(ring.field));
                continue;
            }
            const Polynomial value = ring.parse(it->second);
            if (!value.is_constant())
                throw InputError("center '" + spec.name + "': offset of '" + v + "' is not a constant");
            c.offsets.push_back(value.coefficient(Monomial(ring.nvars())));
        }
        centers.push_back(std::move(c));
    }
    return Scene(std::move(ring), std::move(f), std::move(centers), options);
}

Json scene_to_json(const SceneFile& file, const Scene& scene) {
    Json out;
    out["schema"] = kSceneSchema;
    if (file.field.is_rational())
        out["field"] = {{"kind", "rational"}};
    else
        out["field"] = {{"kind", "prime"}, {"p", file.field.characteristic()}};
    out["variables"] = file.variables;
    out["hypersurface"] = scene.ring().render(scene.hypersurface());
    Json centers = Json::array();
    for (const auto& c : scene.centers()) {
        Json jc;
        jc["name"] = c.name;
        Json van = Json::array();
        Json at = Json::object();
        for (std::size_t a = 0; a < c.vanishing.size(); ++a) {
            van.push_back(file.variables[c.vanishing[a]]);
            if (!c.offsets[a].is_zero()) at[file.variables[c.vanishing[a]]] = c.offsets[a].to_string();
        }
        jc["vanishing"] = van;
        if (!at.empty()) jc["at"] = at;
        centers.push_back(jc);
    }
    out["centers"] = centers;
    return out;
}

}  // namespace blowup
