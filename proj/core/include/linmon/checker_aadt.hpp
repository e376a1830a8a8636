#pragma once

#include "linmon/frontier.hpp"
#include "linmon/history.hpp"
#include "linmon/verdict.hpp"

namespace linmon {

struct AadtOptions {
	/// Skip partition states already expanded. Sound because every legal order reaching the
	/// same state leaves an anagram-agnostic object in the same abstract state.
	bool memoize = true;
	bool want_witness = true;
};

/// Depth-first search over the frontier graph carrying one simulated object that is updated
/// on each edge and rolled back on retreat. Throws std::invalid_argument for stack and queue
/// histories.
[[nodiscard]] Verdict check_aadt(const History &h, AadtOptions options = {});

/// Same search over a prebuilt graph of h.
[[nodiscard]] Verdict check_aadt(const History &h, const FrontierGraph &graph, AadtOptions options = {});

} // namespace linmon
