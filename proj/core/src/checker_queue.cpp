#include "linmon/checker_queue.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <queue>

namespace linmon {

namespace {

void expand(const History &h, const FrontierGraph &g, const QueueConfig &from, std::vector<QueueTransition> &out)
{
	// rules 1, 5, 6: an operation already reached joins the settled prefix
	for (const auto &e : g.successors(from.settled)) {
		if (!g.contains(from.reached, e.op))
			continue;
		const auto &op = h.ops[e.op];
		switch (op.method) {
		case Method::Enq:
			if (from.front.is_empty())
				out.push_back({1, e.op, {e.target, from.reached, op.value}});
			break;
		case Method::Peek:
			out.push_back({5, e.op, {e.target, from.reached, from.front}});
			break;
		case Method::Deq:
			out.push_back({6, e.op, {e.target, from.reached, from.front}});
			break;
		default:
			break;
		}
	}
	// rules 2, 3, 4, 7: a new operation is placed after everything reached
	for (const auto &e : g.successors(from.reached)) {
		const auto &op = h.ops[e.op];
		switch (op.method) {
		case Method::Peek:
			if (from.front.is_concrete() && op.value == from.front)
				out.push_back({2, e.op, {from.settled, e.target, from.front}});
			break;
		case Method::Deq:
			if (from.front.is_concrete() && op.value == from.front)
				out.push_back({3, e.op, {from.settled, e.target, Value::empty()}});
			else if (op.value.is_empty() && from.front.is_empty() && from.settled == from.reached)
				out.push_back({4, e.op, {from.settled, e.target, Value::empty()}});
			break;
		case Method::Enq:
			out.push_back({7, e.op, {from.settled, e.target, from.front}});
			break;
		default:
			break;
		}
	}
}

void require_queue(const History &h)
{
	if (h.kind != AdtKind::Queue)
		throw std::invalid_argument("queue engine: history kind is '" + std::string(to_string(h.kind)) + "'");
	for (const auto &op : h.ops)
		if (op.method == Method::Peek && op.value.is_empty())
			throw std::invalid_argument("queue engine: failed peeks are not supported (operation '" + op.id + "')");
}

struct ConfigHash {
	std::size_t operator()(const QueueConfig &c) const noexcept
	{
		std::size_t seed = c.settled;
		seed = seed * 0x9e3779b97f4a7c15ULL + c.reached;
		seed = seed * 0x9e3779b97f4a7c15ULL + std::hash<Value>{}(c.front);
		return seed ^ (seed >> 29);
	}
};

struct Arrival {
	QueueConfig from;
	int rule;
	OpIndex op;
};

/// Orders the operations of an accepted run. The run fixes the role of every operation: the
/// enqueues registered as fronts (in registration order), the front each peek and dequeue
/// observed, and the empty gap each failed dequeue fell into. Those roles induce precedence
/// edges that make any linear extension legal; real-time precedence is added through a chain
/// of virtual nodes over the distinct response times. Kahn's algorithm then picks operations in
/// placement order where it has a choice.
std::optional<std::vector<OpIndex>> order_from_run(const History &h, const std::vector<std::pair<int, OpIndex>> &steps)
{
	const auto n = static_cast<std::uint32_t>(h.ops.size());
	std::vector<std::vector<std::uint32_t>> next(n);
	std::vector<std::uint32_t> rank(n, 0);
	auto add_node = [&](std::uint32_t priority) {
		next.emplace_back();
		rank.push_back(priority);
		return static_cast<std::uint32_t>(next.size() - 1);
	};
	auto edge = [&](std::uint32_t from, std::uint32_t to) { next[from].push_back(to); };

	struct Epoch {
		OpIndex front;
		std::vector<OpIndex> peeks;
		std::optional<OpIndex> deq;
	};
	std::vector<Epoch> epochs;
	std::vector<std::vector<OpIndex>> gaps(1); // failed dequeues seen after j fronts
	std::vector<bool> fronted(n, false);
	std::vector<OpIndex> enqueues;
	std::uint32_t placed = 0;
	for (const auto &[rule, op] : steps) {
		switch (rule) {
		case 1:
			epochs.push_back({op, {}, std::nullopt});
			gaps.emplace_back();
			fronted[op] = true;
			break;
		case 2:
			epochs.back().peeks.push_back(op);
			break;
		case 3:
			epochs.back().deq = op;
			break;
		case 4:
			gaps.back().push_back(op);
			break;
		case 7:
			enqueues.push_back(op);
			break;
		default:
			break;
		}
		if (rule == 2 || rule == 3 || rule == 4 || rule == 7)
			rank[op] = placed++;
	}

	for (std::size_t i = 0; i < epochs.size(); ++i) {
		const auto &e = epochs[i];
		const OpIndex *previous = i > 0 && epochs[i - 1].deq ? &*epochs[i - 1].deq : nullptr;
		if (i > 0)
			edge(epochs[i - 1].front, e.front);
		for (auto p : e.peeks) {
			edge(e.front, p);
			if (previous)
				edge(*previous, p);
			if (e.deq)
				edge(p, *e.deq);
		}
		if (e.deq) {
			edge(e.front, *e.deq);
			if (previous)
				edge(*previous, *e.deq);
		}
	}
	std::vector<OpIndex> unfronted;
	for (auto op : enqueues)
		if (!fronted[op]) {
			unfronted.push_back(op);
			if (!epochs.empty())
				edge(epochs.back().front, op);
		}
	for (std::size_t j = 0; j < gaps.size(); ++j) {
		if (gaps[j].empty())
			continue;
		const auto barrier = add_node(0);
		for (auto z : gaps[j]) {
			if (j > 0)
				edge(*epochs[j - 1].deq, z);
			edge(z, barrier);
		}
		if (j < epochs.size())
			edge(barrier, epochs[j].front);
		else
			for (auto u : unfronted)
				edge(barrier, u);
	}

	// x must precede y whenever res(x) <= inv(y)
	std::vector<TimeStamp> responses;
	for (const auto &o : h.ops)
		responses.push_back(o.res);
	std::sort(responses.begin(), responses.end());
	responses.erase(std::unique(responses.begin(), responses.end()), responses.end());
	std::vector<std::uint32_t> chain;
	for (std::size_t i = 0; i < responses.size(); ++i) {
		chain.push_back(add_node(0));
		if (i > 0)
			edge(chain[i - 1], chain[i]);
	}
	for (OpIndex x = 0; x < n; ++x) {
		const auto &o = h.ops[x];
		edge(x, chain[static_cast<std::size_t>(std::lower_bound(responses.begin(), responses.end(), o.res) - responses.begin())]);
		const auto after = std::upper_bound(responses.begin(), responses.end(), o.inv) - responses.begin();
		if (after > 0)
			edge(chain[static_cast<std::size_t>(after - 1)], x);
	}

	std::vector<std::uint32_t> indegree(next.size(), 0);
	for (const auto &targets : next)
		for (auto t : targets)
			++indegree[t];
	using Item = std::pair<std::uint64_t, std::uint32_t>;
	std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
	auto key = [&](std::uint32_t node) { return node < n ? std::uint64_t{rank[node]} + 1 : 0; };
	for (std::uint32_t v = 0; v < next.size(); ++v)
		if (indegree[v] == 0)
			ready.emplace(key(v), v);
	std::vector<OpIndex> order;
	order.reserve(n);
	while (!ready.empty()) {
		const auto v = ready.top().second;
		ready.pop();
		if (v < n)
			order.push_back(v);
		for (auto t : next[v])
			if (--indegree[t] == 0)
				ready.emplace(key(t), t);
	}
	if (order.size() != n)
		return std::nullopt;
	return order;
}

} // namespace

std::vector<QueueTransition> queue_transitions(const History &h, const FrontierGraph &g, const QueueConfig &from)
{
	if (from.settled >= g.state_count() || from.reached >= g.state_count())
		throw std::invalid_argument("queue_transitions: unknown partition state");
	for (auto op : g.members(from.settled).members)
		if (!g.contains(from.reached, op))
			throw std::invalid_argument("queue_transitions: settled state is not contained in reached state");
	std::vector<QueueTransition> out;
	expand(h, g, from, out);
	return out;
}

Verdict queue_check(const History &h, QueueOptions options, QueueStats *stats)
{
	require_queue(h);
	Verdict verdict;
	if (h.ops.empty()) {
		verdict.linearizable = true;
		if (options.want_witness)
			verdict.witness = std::vector<WitnessEntry>{};
		return verdict;
	}

	const auto graph = FrontierGraph::build(h);
	const auto width = concurrency_width(h);
	const QueueConfig seed{graph.empty_state(), graph.empty_state(), Value::empty()};

	// configurations grouped by |settled| + |reached|; each transition adds exactly one
	using Level = std::unordered_map<QueueConfig, Arrival, ConfigHash>;
	std::vector<Level> levels(2 * h.ops.size() + 2);
	std::vector<std::vector<QueueConfig>> order(levels.size());
	levels[0].emplace(seed, Arrival{seed, 0, 0});
	order[0].push_back(seed);

	std::optional<std::pair<QueueConfig, std::size_t>> accepted;
	std::vector<QueueTransition> out;
	QueueStats local;
	std::unordered_map<std::uint64_t, std::size_t> fired_per_pair;

	for (std::size_t level = 0; level + 1 < levels.size() && !accepted; ++level) {
		fired_per_pair.clear();
		for (const auto &config : order[level]) {
			out.clear();
			expand(h, graph, config, out);
			local.transitions += out.size();
			fired_per_pair[(std::uint64_t{config.settled} << 32) | config.reached] += out.size();
			for (const auto &t : out) {
				auto [it, fresh] = levels[level + 1].emplace(t.target, Arrival{config, t.rule, t.op});
				if (!fresh)
					continue;
				order[level + 1].push_back(t.target);
				if (t.target.reached == graph.full_state()) {
					accepted = {t.target, level + 1};
					break;
				}
			}
			if (accepted)
				break;
		}
		for (const auto &[pair, fired] : fired_per_pair) {
			const auto settled = static_cast<StateId>(pair >> 32);
			const auto reached = static_cast<StateId>(pair & 0xffffffffU);
			const auto bound = (width + 1) * (graph.successors(settled).size() + graph.successors(reached).size() + 1);
			if (fired > bound)
				++local.loop_bound_violations;
		}
		local.configs += order[level].size();
		std::unordered_map<std::uint64_t, bool> pairs;
		for (const auto &c : order[level])
			pairs[(std::uint64_t{c.settled} << 32) | c.reached] = true;
		local.entries += pairs.size();
		if (!options.want_witness && level > 0) {
			Level().swap(levels[level - 1]);
			std::vector<QueueConfig>().swap(order[level - 1]);
		}
	}

	verdict.linearizable = accepted.has_value();
	verdict.states_visited = local.entries;
	if (stats)
		*stats = local;

	if (accepted && options.want_witness) {
		std::vector<std::pair<int, OpIndex>> steps;
		auto [config, level] = *accepted;
		while (level > 0) {
			const auto &arrival = levels[level].at(config);
			steps.emplace_back(arrival.rule, arrival.op);
			config = arrival.from;
			--level;
		}
		std::reverse(steps.begin(), steps.end());
		auto order = order_from_run(h, steps);
		if (!order)
			throw std::logic_error("queue engine: accepted run admits no consistent order");
		verdict.witness = assign_timestamps(h, *order);
	}
	return verdict;
}

} // namespace linmon
