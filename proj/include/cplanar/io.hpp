#pragma once

#include <string>

#include <json.hpp>

#include "cplanar/decide.hpp"

namespace cplanar {

using json = nlohmann::json;

/// {"c", "clusters", "edges", "rotations"}. Throws ParseError on shape errors and
/// the map errors of CombMap::build on bad rotations.
CGraph instance_from_json(const json& j);
json instance_to_json(const CGraph& cg);

CGraph read_instance(const std::string& path);
void write_instance(const std::string& path, const CGraph& cg);

json certificate_to_json(const CGraph& input, const Verdict& v);
json certificate_to_json(const CGraph& input, const Certificate& cert);

/// Loads a certificate file; the embedded input is stored in *input when given.
Certificate certificate_from_json(const json& j, CGraph* input = nullptr);

json read_json(const std::string& path);
void write_json(const std::string& path, const json& j);

}  // namespace cplanar
