#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "dmm/algebra.hpp"

namespace dmm {

using Json = nlohmann::ordered_json;

/// {"name"?, "size", "le", "fusion", "e", "neg"}; name is omitted when absent.
Json toJson(const FiniteAlgebra& a);

/// Parses and validates an algebra document. Throws BadInput on shape errors
/// and the validation errors of FiniteAlgebra::validate.
FiniteAlgebra fromJson(const Json& doc);

/// Compact serialization with a trailing newline.
std::string dumpAlgebra(const FiniteAlgebra& a);

FiniteAlgebra parseAlgebra(const std::string& text);
FiniteAlgebra loadAlgebra(const std::filesystem::path& path);
std::string readFile(const std::filesystem::path& path);

} // namespace dmm
