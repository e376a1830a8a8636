#include "linmon/frontier.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace linmon {

namespace {

constexpr std::size_t kMaxLiveOperations = 62;

} // namespace

bool is_partition_state(const History &h, std::span<const OpIndex> members)
{
	std::vector<bool> in(h.ops.size(), false);
	for (auto op : members) {
		if (op >= h.ops.size())
			throw std::out_of_range("operation index out of range");
		in[op] = true;
	}
	std::optional<TimeStamp> max_inv;
	std::optional<TimeStamp> min_res;
	for (std::size_t i = 0; i < h.ops.size(); ++i) {
		if (in[i]) {
			if (!max_inv || *max_inv < h.ops[i].inv)
				max_inv = h.ops[i].inv;
		} else {
			if (!min_res || h.ops[i].res < *min_res)
				min_res = h.ops[i].res;
		}
	}
	return !max_inv || !min_res || *max_inv < *min_res;
}

bool is_partition_state(const History &h, std::span<const std::string> ids)
{
	std::unordered_map<std::string, OpIndex> index;
	for (std::size_t i = 0; i < h.ops.size(); ++i)
		index.emplace(h.ops[i].id, static_cast<OpIndex>(i));
	std::vector<OpIndex> members;
	for (const auto &id : ids) {
		auto it = index.find(id);
		if (it == index.end())
			throw HistoryError("unknown operation id", id);
		members.push_back(it->second);
	}
	return is_partition_state(h, std::span<const OpIndex>(members));
}

FrontierGraph FrontierGraph::build(const History &h, Options options)
{
	FrontierGraph g;
	const auto n = h.ops.size();
	const auto endpoints = distinct_endpoints(h);
	const auto d = static_cast<std::uint32_t>(endpoints.size());
	auto rank = [&](const TimeStamp &t) {
		return static_cast<std::uint32_t>(std::lower_bound(endpoints.begin(), endpoints.end(), t) -
		                                  endpoints.begin());
	};

	g.inv_.resize(n);
	g.res_.resize(n);
	for (std::size_t i = 0; i < n; ++i) {
		g.inv_[i] = rank(h.ops[i].inv);
		g.res_[i] = rank(h.ops[i].res);
	}

	g.by_inv_.resize(n);
	for (std::size_t i = 0; i < n; ++i)
		g.by_inv_[i] = static_cast<OpIndex>(i);
	std::stable_sort(g.by_inv_.begin(), g.by_inv_.end(),
	                 [&](OpIndex a, OpIndex b) { return g.inv_[a] < g.inv_[b]; });
	g.by_inv_start_.assign(d + 2, static_cast<std::uint32_t>(n));
	g.min_res_from_inv_.assign(d + 2, std::numeric_limits<std::uint32_t>::max());
	for (std::size_t pos = n; pos-- > 0;) {
		auto r = g.inv_[g.by_inv_[pos]];
		g.by_inv_start_[r] = static_cast<std::uint32_t>(pos);
	}
	for (std::uint32_t r = d + 1; r-- > 0;)
		g.by_inv_start_[r] = std::min(g.by_inv_start_[r], g.by_inv_start_[r + 1]);
	for (std::size_t i = 0; i < n; ++i)
		g.min_res_from_inv_[g.inv_[i]] = std::min(g.min_res_from_inv_[g.inv_[i]], g.res_[i]);
	for (std::uint32_t r = d + 1; r-- > 0;)
		g.min_res_from_inv_[r] = std::min(g.min_res_from_inv_[r], g.min_res_from_inv_[r + 1]);

	// sweep the gaps, keeping the operations live in the current one
	std::vector<std::vector<OpIndex>> opening(d);
	std::vector<std::vector<OpIndex>> closing(d);
	for (std::size_t i = 0; i < n; ++i) {
		opening[g.inv_[i]].push_back(static_cast<OpIndex>(i));
		closing[g.res_[i]].push_back(static_cast<OpIndex>(i));
	}

	g.free_offsets_.push_back(0);
	g.free_offsets_.push_back(0); // gap 0 has nothing live
	g.required_count_.push_back(0);
	g.gap_state_offsets_.push_back(0);
	g.state_gap_.push_back(0);
	g.state_mask_.push_back(0);

	std::vector<OpIndex> live;
	std::uint32_t finished = 0;
	std::uint32_t full_gap = 0;
	for (std::uint32_t gap = 1; gap <= d; ++gap) {
		const auto endpoint = gap - 1;
		finished += static_cast<std::uint32_t>(closing[endpoint].size());
		std::erase_if(live, [&](OpIndex op) { return g.res_[op] == endpoint; });
		for (auto op : opening[endpoint])
			live.push_back(op);
		std::sort(live.begin(), live.end());
		if (live.size() > kMaxLiveOperations)
			throw std::length_error("too many concurrently live operations for the frontier graph");

		Mask fresh = 0;
		for (std::size_t bit = 0; bit < live.size(); ++bit)
			if (g.inv_[live[bit]] == endpoint)
				fresh |= Mask{1} << bit;

		g.free_ops_.insert(g.free_ops_.end(), live.begin(), live.end());
		g.free_offsets_.push_back(static_cast<std::uint32_t>(g.free_ops_.size()));
		g.required_count_.push_back(finished);
		g.gap_state_offsets_.push_back(static_cast<std::uint32_t>(g.state_gap_.size()));

		if (fresh != 0) {
			full_gap = gap;
			const Mask limit = Mask{1} << live.size();
			for (Mask m = 0; m < limit; ++m) {
				if ((m & fresh) == 0)
					continue;
				g.state_gap_.push_back(gap);
				g.state_mask_.push_back(m);
			}
		}
	}
	g.gap_state_offsets_.push_back(static_cast<std::uint32_t>(g.state_gap_.size()));

	if (n > 0) {
		const auto live_count = g.free_offsets_[full_gap + 1] - g.free_offsets_[full_gap];
		g.full_ = *g.lookup(full_gap, (Mask{1} << live_count) - 1);
	}

	if (options.materialize_edges) {
		g.edge_offsets_.reserve(g.state_count() + 1);
		g.edge_offsets_.push_back(0);
		for (StateId s = 0; s < g.state_count(); ++s) {
			auto out = g.compute_successors(s);
			g.edges_.insert(g.edges_.end(), out.begin(), out.end());
			g.edge_offsets_.push_back(static_cast<std::uint32_t>(g.edges_.size()));
		}
	}
	return g;
}

std::size_t FrontierGraph::edge_count() const
{
	if (has_materialized_edges())
		return edges_.size();
	std::size_t total = 0;
	for (StateId s = 0; s < state_count(); ++s)
		total += compute_successors(s).size();
	return total;
}

std::size_t FrontierGraph::state_size(StateId s) const
{
	return required_count_[state_gap_[s]] + static_cast<std::size_t>(std::popcount(state_mask_[s]));
}

int FrontierGraph::free_position(std::uint32_t gap, OpIndex op) const
{
	auto first = free_ops_.begin() + free_offsets_[gap];
	auto last = free_ops_.begin() + free_offsets_[gap + 1];
	auto it = std::lower_bound(first, last, op);
	if (it == last || *it != op)
		return -1;
	return static_cast<int>(it - first);
}

bool FrontierGraph::contains(StateId s, OpIndex op) const
{
	const auto gap = state_gap_[s];
	if (gap == 0)
		return false;
	if (res_[op] < gap)
		return true;
	if (inv_[op] >= gap)
		return false;
	auto pos = free_position(gap, op);
	return pos >= 0 && ((state_mask_[s] >> pos) & 1U) != 0;
}

PartitionState FrontierGraph::members(StateId s) const
{
	PartitionState out;
	for (OpIndex op = 0; op < op_count(); ++op)
		if (contains(s, op))
			out.members.push_back(op);
	return out;
}

std::optional<StateId> FrontierGraph::lookup(std::uint32_t gap, Mask mask) const
{
	if (gap + 1 >= gap_state_offsets_.size())
		return std::nullopt;
	auto first = state_mask_.begin() + gap_state_offsets_[gap];
	auto last = state_mask_.begin() + gap_state_offsets_[gap + 1];
	auto it = std::lower_bound(first, last, mask);
	if (it == last || *it != mask)
		return std::nullopt;
	return static_cast<StateId>(it - state_mask_.begin());
}

std::optional<StateId> FrontierGraph::extend(StateId s, OpIndex op) const
{
	if (op >= op_count() || contains(s, op))
		return std::nullopt;
	const auto gap = state_gap_[s];
	const auto mask = state_mask_[s];
	const auto top = gap == 0 ? inv_[op] : std::max(gap - 1, inv_[op]);
	const auto next_gap = top + 1;

	// every operation finished before the new gap must already be a member
	std::uint32_t finished_members = required_count_[gap];
	Mask next_mask = 0;
	const auto live_first = free_offsets_[gap];
	for (int bit = 0; mask >> bit != 0; ++bit) {
		if (((mask >> bit) & 1U) == 0)
			continue;
		auto member = free_ops_[live_first + static_cast<std::uint32_t>(bit)];
		if (res_[member] < next_gap) {
			++finished_members;
		} else {
			auto pos = free_position(next_gap, member);
			if (pos < 0)
				return std::nullopt;
			next_mask |= Mask{1} << pos;
		}
	}
	if (finished_members != required_count_[next_gap])
		return std::nullopt;
	auto pos = free_position(next_gap, op);
	if (pos < 0)
		return std::nullopt;
	next_mask |= Mask{1} << pos;
	return lookup(next_gap, next_mask);
}

std::vector<Edge> FrontierGraph::compute_successors(StateId s) const
{
	std::vector<Edge> out;
	const auto gap = state_gap_[s];
	const auto mask = state_mask_[s];
	auto bound = min_res_from_inv_[gap];
	const auto live_first = free_offsets_[gap];
	const auto live_count = free_offsets_[gap + 1] - live_first;
	for (std::uint32_t bit = 0; bit < live_count; ++bit)
		if (((mask >> bit) & 1U) == 0)
			bound = std::min(bound, res_[free_ops_[live_first + bit]]);

	auto push = [&](OpIndex op) {
		if (auto next = extend(s, op))
			out.push_back({op, *next});
	};
	for (std::uint32_t bit = 0; bit < live_count; ++bit)
		if (((mask >> bit) & 1U) == 0)
			push(free_ops_[live_first + bit]);
	// not-yet-invoked operations that may come next: invoked before anything outside responds
	for (auto pos = by_inv_start_[gap]; pos < by_inv_.size() && inv_[by_inv_[pos]] < bound; ++pos)
		push(by_inv_[pos]);

	std::sort(out.begin(), out.end(), [](const Edge &a, const Edge &b) { return a.op < b.op; });
	return out;
}

std::vector<Edge> FrontierGraph::successors(StateId s) const
{
	if (s >= state_count())
		throw std::out_of_range("unknown partition state");
	if (has_materialized_edges()) {
		auto span = successor_span(s);
		return {span.begin(), span.end()};
	}
	return compute_successors(s);
}

std::span<const Edge> FrontierGraph::successor_span(StateId s) const
{
	if (!has_materialized_edges())
		throw std::logic_error("successor_span requires materialized edges");
	if (s >= state_count())
		throw std::out_of_range("unknown partition state");
	return {edges_.data() + edge_offsets_[s], edges_.data() + edge_offsets_[s + 1]};
}

std::optional<StateId> FrontierGraph::find(std::span<const OpIndex> members) const
{
	if (members.empty())
		return empty_state();
	std::uint32_t top = 0;
	for (auto op : members) {
		if (op >= op_count())
			return std::nullopt;
		top = std::max(top, inv_[op]);
	}
	const auto gap = top + 1;
	std::uint32_t finished = 0;
	Mask mask = 0;
	for (auto op : members) {
		if (res_[op] < gap) {
			++finished;
		} else {
			auto pos = free_position(gap, op);
			if (pos < 0)
				return std::nullopt;
			mask |= Mask{1} << pos;
		}
	}
	if (finished != required_count_[gap])
		return std::nullopt;
	return lookup(gap, mask);
}

std::vector<PartitionState> enumerate_partition_states(const History &h)
{
	auto g = FrontierGraph::build(h, {.materialize_edges = false});
	std::vector<PartitionState> out;
	out.reserve(g.state_count());
	for (StateId s = 0; s < g.state_count(); ++s)
		out.push_back(g.members(s));
	std::sort(out.begin(), out.end(), [](const PartitionState &a, const PartitionState &b) {
		if (a.size() != b.size())
			return a.size() < b.size();
		return a.members < b.members;
	});
	return out;
}

std::vector<Edge> successors(const FrontierGraph &g, const PartitionState &s)
{
	auto id = g.find(s.members);
	if (!id)
		throw std::out_of_range("not a partition state of this graph");
	return g.successors(*id);
}

std::string to_dot(const FrontierGraph &g, const History &h)
{
	std::ostringstream out;
	out << "digraph frontier {\n";
	for (StateId s = 0; s < g.state_count(); ++s) {
		std::vector<std::string> ids;
		for (auto op : g.members(s).members)
			ids.push_back(h.ops[op].id);
		std::sort(ids.begin(), ids.end());
		out << "  s" << s << " [label=\"{";
		for (std::size_t i = 0; i < ids.size(); ++i)
			out << (i ? "," : "") << ids[i];
		out << "}\"];\n";
	}
	for (StateId s = 0; s < g.state_count(); ++s)
		for (const auto &e : g.successors(s))
			out << "  s" << s << " -> s" << e.target << " [label=\"" << h.ops[e.op].id << "\"];\n";
	out << "}\n";
	return out.str();
}

} // namespace linmon
