#pragma once

#include <string>

#include "lingwalk/walk.hpp"

namespace lingwalk {

/// JSON document {version, vertices:[{id, degree, coin}], edges:[[v,a,u,b]],
/// accept, reject, input_map, steps, mode, language, input_length}.
/// Round-trips losslessly; `build --emit` writes it, `run --graph` reads it.
std::string walk_to_json(const Walk& walk);

/// Parses and fully revalidates (matching, coin dimensions, unitarity).
/// Throws std::invalid_argument on malformed or inconsistent documents.
Walk walk_from_json(const std::string& text);

}  // namespace lingwalk
