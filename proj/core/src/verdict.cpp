#include "linmon/verdict.hpp"

#include "linmon/adt_models.hpp"

#include <algorithm>

namespace linmon {

std::optional<std::vector<WitnessEntry>> assign_timestamps(const History &h, std::span<const OpIndex> order)
{
	const auto endpoints = distinct_endpoints(h);
	auto index_of = [&](const TimeStamp &t) {
		return static_cast<std::size_t>(std::lower_bound(endpoints.begin(), endpoints.end(), t) -
		                                endpoints.begin());
	};

	// greedy: each operation goes into the earliest gap after both its invocation and its
	// predecessor's gap
	std::vector<std::size_t> gap_of(order.size());
	std::size_t current = 0;
	for (std::size_t i = 0; i < order.size(); ++i) {
		if (order[i] >= h.ops.size())
			return std::nullopt;
		const auto &op = h.ops[order[i]];
		current = std::max(current, index_of(op.inv));
		if (current + 1 >= endpoints.size() || op.res < endpoints[current + 1])
			return std::nullopt;
		gap_of[i] = current;
	}

	std::vector<WitnessEntry> out;
	out.reserve(order.size());
	for (std::size_t first = 0; first < order.size();) {
		auto last = first;
		while (last < order.size() && gap_of[last] == gap_of[first])
			++last;
		const auto &lo = endpoints[gap_of[first]];
		const auto width = endpoints[gap_of[first] + 1] - lo;
		const auto slots = static_cast<std::int64_t>(last - first + 1);
		for (auto i = first; i < last; ++i)
			out.push_back({order[i], lo + width * TimeStamp(static_cast<std::int64_t>(i - first + 1), slots)});
		first = last;
	}
	return out;
}

std::vector<std::string> witness_problems(const History &h, std::span<const WitnessEntry> witness)
{
	std::vector<std::string> problems;
	if (witness.size() != h.ops.size())
		problems.push_back("witness length differs from history size");
	std::vector<bool> seen(h.ops.size(), false);
	std::vector<AbstractOperation> sequence;
	for (std::size_t i = 0; i < witness.size(); ++i) {
		const auto &entry = witness[i];
		if (entry.op >= h.ops.size()) {
			problems.push_back("unknown operation index");
			continue;
		}
		const auto &op = h.ops[entry.op];
		if (seen[entry.op])
			problems.push_back("operation '" + op.id + "' appears twice");
		seen[entry.op] = true;
		if (!(op.inv < entry.at && entry.at < op.res))
			problems.push_back("operation '" + op.id + "' placed outside its interval");
		if (i > 0 && !(witness[i - 1].at < entry.at))
			problems.push_back("timestamps not strictly increasing at '" + op.id + "'");
		sequence.push_back(AbstractOperation::of(op));
	}
	if (!sequence_member(h.kind, sequence))
		problems.push_back("induced sequence is not legal for the ADT");
	return problems;
}

} // namespace linmon
