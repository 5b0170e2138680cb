#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "blowup/geometry.hpp"

namespace blowup {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSceneSchema = "blowup-scene/1";

struct CenterSpec {
    std::string name;
    std::vector<std::string> vanishing;
    /// Optional translation: vanishing name -> constant expression.
    std::map<std::string, std::string> at;
};

/// Scene file contents after shape validation. See schema/scene.schema.json.
struct SceneFile {
    Field field;
    std::vector<std::string> variables;
    std::string hypersurface;
    std::vector<CenterSpec> centers;
};

/// Throws InputError (or ParseError for malformed JSON) naming the offending key.
SceneFile parse_scene_file(std::string_view text);
SceneFile scene_file_from_json(const Json& doc);

/// Parses expressions and builds a validated Scene.
Scene build_scene(const SceneFile& file, const GroebnerOptions& options = {});

/// Canonical echo: hypersurface re-rendered, keys in schema order.
Json scene_to_json(const SceneFile& file, const Scene& scene);

}  // namespace blowup
