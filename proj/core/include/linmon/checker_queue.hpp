#pragma once

#include "linmon/frontier.hpp"
#include "linmon/history.hpp"
#include "linmon/verdict.hpp"

#include <cstdint>
#include <vector>

namespace linmon {

/// A configuration of the split-sequence transition system over partition states:
/// `settled` is the committed prefix, `reached` additionally holds the operations placed
/// after the current front's enqueue, and `front` is the tracked front value (empty when
/// no front is registered).
struct QueueConfig {
	StateId settled;
	StateId reached;
	Value front;

	friend auto operator<=>(const QueueConfig &, const QueueConfig &) = default;
};

struct QueueTransition {
	int rule;  // 1..7
	OpIndex op;
	QueueConfig target;

	friend bool operator==(const QueueTransition &, const QueueTransition &) = default;
};

/// Every configuration one step from `from`. Throws std::invalid_argument unless
/// settled ⊆ reached.
[[nodiscard]] std::vector<QueueTransition> queue_transitions(const History &h, const FrontierGraph &g,
                                                             const QueueConfig &from);

struct QueueStats {
	std::size_t entries = 0;      // distinct (settled, reached) pairs reached
	std::size_t configs = 0;      // distinct configurations reached
	std::size_t transitions = 0;  // transitions fired
	/// Pairs whose fired transitions exceeded (k+1)(outdeg(settled)+outdeg(reached)+1).
	std::size_t loop_bound_violations = 0;
};

struct QueueOptions {
	bool want_witness = true;
};

/// Forward dynamic program over configurations in order of |settled| + |reached|.
/// Throws std::invalid_argument for non-queue histories or histories with failed peeks.
[[nodiscard]] Verdict queue_check(const History &h, QueueOptions options = {}, QueueStats *stats = nullptr);

} // namespace linmon
