#pragma once

#include "vko/linking.hpp"
#include "vko/obstruction.hpp"
#include "vko/plmap.hpp"
#include "vko/simplicial.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace vko {

using Json = nlohmann::ordered_json;

/// {"name", "vertex_count", "maximal_simplices", "marked"}; canonical order.
Json complexToJson(const SimplicialComplex& k);
SimplicialComplex complexFromJson(const Json& j);

/// {"complex", "d", "coords"}; "complex" may also be a path, resolved against baseDir.
Json mapToJson(const PLMap& f);
PLMap mapFromJson(const Json& j, const std::filesystem::path& baseDir = {});

/// {"d", "name", "components": [{"complex", "coords", "orientation"}]}
Json ornamentToJson(const Ornament& orn);
Ornament ornamentFromJson(const Json& j, const std::filesystem::path& baseDir = {});

Json reportToJson(const ObstructionReport& report, bool includeWitness);

/// Throws InvalidInput when the file is missing or is not JSON.
Json readJsonFile(const std::filesystem::path& path);

} // namespace vko
