#include "linmon/oracle.hpp"

#include "linmon/adt_models.hpp"

namespace linmon {

namespace {

void check_cap(const History &h, const OracleOptions &options)
{
	if (h.ops.size() > options.max_operations)
		throw OracleCapExceeded("history has " + std::to_string(h.ops.size()) +
		                        " operations; the oracle cap is " + std::to_string(options.max_operations));
}

/// op may come next iff it was invoked before every other pending operation responded.
bool can_come_next(const History &h, const std::vector<bool> &taken, std::size_t op)
{
	for (std::size_t other = 0; other < h.ops.size(); ++other)
		if (other != op && !taken[other] && !(h.ops[op].inv < h.ops[other].res))
			return false;
	return true;
}

struct Search {
	const History &h;
	std::vector<bool> taken;
	std::vector<OpIndex> order;
	SimulatedObject *object = nullptr; // null: enumerate without legality pruning
	const std::function<bool(std::span<const OpIndex>)> *visit = nullptr;
	std::size_t visited = 0;

	// returns false once the visitor asked to stop
	bool run()
	{
		if (order.size() == h.ops.size()) {
			++visited;
			return visit == nullptr || (*visit)(order);
		}
		for (std::size_t op = 0; op < h.ops.size(); ++op) {
			if (taken[op] || !can_come_next(h, taken, op))
				continue;
			if (object && !object->apply(AbstractOperation::of(h.ops[op])))
				continue;
			taken[op] = true;
			order.push_back(static_cast<OpIndex>(op));
			const bool keep_going = run();
			order.pop_back();
			taken[op] = false;
			if (object)
				object->undo();
			if (!keep_going)
				return false;
		}
		return true;
	}
};

} // namespace

std::size_t enumerate_linearizations(const History &h,
                                     const std::function<bool(std::span<const OpIndex>)> &visit,
                                     OracleOptions options)
{
	check_cap(h, options);
	Search search{h, std::vector<bool>(h.ops.size(), false), {}, nullptr, &visit};
	search.run();
	return search.visited;
}

Verdict oracle_check(const History &h, OracleOptions options)
{
	check_cap(h, options);
	auto object = new_object(h.kind);
	std::vector<OpIndex> found;
	std::function<bool(std::span<const OpIndex>)> visit = [&](std::span<const OpIndex> order) {
		found.assign(order.begin(), order.end());
		return false;
	};
	Search search{h, std::vector<bool>(h.ops.size(), false), {}, object.get(), &visit};
	search.run();

	Verdict verdict;
	verdict.states_visited = search.visited;
	if (search.visited > 0) {
		verdict.linearizable = true;
		verdict.witness = assign_timestamps(h, found);
	}
	return verdict;
}

} // namespace linmon
