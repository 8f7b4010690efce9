#pragma once

#include <json.hpp>

namespace aspectra {

/// Insertion-ordered JSON, so serialized reports keep a stable field order.
using Json = nlohmann::ordered_json;

} // namespace aspectra
