#pragma once

#include "linmon/history.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace linmon {

/// Parses and validates a history JSON document:
///
///   {"adt": "queue",
///    "operations": [{"id": "o1", "method": "enq", "value": 3, "aux": null,
///                    "inv": 1, "res": "7/2"}, ...]}
///
/// "value": null encodes a failed operation. Times are integers or "p/q" strings.
/// Throws HistoryError naming the offending operation id.
[[nodiscard]] History parse_history(std::string_view text);

[[nodiscard]] History load_history(const std::filesystem::path &path);

/// Inverse of parse_history. Bottom values are not representable and throw.
[[nodiscard]] std::string serialize_history(const History &h, int indent = 2);

void save_history(const History &h, const std::filesystem::path &path);

} // namespace linmon
