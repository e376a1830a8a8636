#pragma once

#include "linmon/frontier.hpp"
#include "linmon/history.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace linmon {

struct WitnessEntry {
	OpIndex op;
	TimeStamp at;

	friend bool operator==(const WitnessEntry &, const WitnessEntry &) = default;
};

struct Verdict {
	bool linearizable = false;
	/// Operations in linearization order with their assigned times.
	std::optional<std::vector<WitnessEntry>> witness;
	/// Partition states the engine touched (expanded nodes, table rows, ...).
	std::size_t states_visited = 0;
};

/// Times strictly inside each interval and strictly increasing along order, or nullopt
/// when the order is not interval consistent. Operations sharing a gap between adjacent
/// endpoints are spread evenly across it.
[[nodiscard]] std::optional<std::vector<WitnessEntry>> assign_timestamps(const History &h,
                                                                        std::span<const OpIndex> order);

/// Empty iff the witness is a permutation of h, timestamps are strictly increasing and
/// strictly inside the intervals, and the induced sequence is legal for h.kind.
[[nodiscard]] std::vector<std::string> witness_problems(const History &h, std::span<const WitnessEntry> witness);

} // namespace linmon
