#include "linmon/checker_stack.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace linmon {

namespace {

const NtSet kEmptyCell;

std::string unique_id(std::string base, std::unordered_set<std::string> &taken)
{
	while (taken.contains(base))
		base += '~';
	taken.insert(base);
	return base;
}

/// The production P -> left right, if any.
std::optional<NonTerminal> combine(const NonTerminal &left, const NonTerminal &right)
{
	if (right.kind != NonTerminal::Kind::T)
		return std::nullopt;
	switch (left.kind) {
	case NonTerminal::Kind::Push:
		if (left.value == right.value)
			return NonTerminal::t_eps();
		return std::nullopt;
	case NonTerminal::Kind::Peek:
		if (left.value == right.value)
			return right;
		return std::nullopt;
	case NonTerminal::Kind::TEps:
		return right;
	case NonTerminal::Kind::T:
		break;
	}
	return std::nullopt;
}

/// Terminal rule for a single-operation cell; nullopt when no symbol is kept.
std::optional<NonTerminal> leaf_symbol(const History &h, const FrontierGraph &g, OpIndex op, StateId to,
                                       const std::unordered_map<Value, std::vector<OpIndex>> &pops)
{
	const auto &o = h.ops[op];
	if (o.value.is_empty())
		throw std::invalid_argument("stack recognition requires failure-free histories; run embed_failed first");
	if (o.method == Method::Pop)
		return NonTerminal::t(o.value);
	auto it = pops.find(o.value);
	const bool closable = it != pops.end() &&
	                      std::any_of(it->second.begin(), it->second.end(),
	                                  [&](OpIndex pop) { return !g.contains(to, pop); });
	if (!closable)
		return std::nullopt;
	if (o.method == Method::Push)
		return NonTerminal::push(o.value);
	return NonTerminal::peek(o.value);
}

std::unordered_map<Value, std::vector<OpIndex>> pops_by_value(const History &h)
{
	std::unordered_map<Value, std::vector<OpIndex>> pops;
	for (std::size_t i = 0; i < h.ops.size(); ++i)
		if (h.ops[i].method == Method::Pop)
			pops[h.ops[i].value].push_back(static_cast<OpIndex>(i));
	return pops;
}

void require_stack(const History &h)
{
	if (h.kind != AdtKind::Stack)
		throw std::invalid_argument("stack engine: history kind is '" + std::string(to_string(h.kind)) + "'");
}

} // namespace

std::string NonTerminal::to_string() const
{
	switch (kind) {
	case Kind::TEps:
		return "T(eps)";
	case Kind::T:
		return "T(" + value.to_string() + ")";
	case Kind::Push:
		return "Push(" + value.to_string() + ")";
	case Kind::Peek:
		return "Peek(" + value.to_string() + ")";
	}
	return "?";
}

NtSet nt_product(const NtSet &a, const NtSet &b)
{
	NtSet out;
	for (const auto &left : a)
		for (const auto &right : b)
			if (auto p = combine(left, right))
				out.push_back(*p);
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

const NtSet &ProductionTable::at(StateId from, StateId to) const
{
	auto it = cells_.find(key(from, to));
	return it == cells_.end() ? kEmptyCell : it->second;
}

bool ProductionTable::insert(StateId from, StateId to, NonTerminal nt)
{
	auto &cell = cells_[key(from, to)];
	auto it = std::lower_bound(cell.begin(), cell.end(), nt);
	if (it != cell.end() && *it == nt)
		return false;
	cell.insert(it, nt);
	return true;
}

bool ProductionTable::contains(StateId from, StateId to, const NonTerminal &nt) const
{
	const auto &cell = at(from, to);
	return std::binary_search(cell.begin(), cell.end(), nt);
}

std::size_t ProductionTable::symbol_count() const
{
	std::size_t total = 0;
	for (const auto &[k, cell] : cells_)
		total += cell.size();
	return total;
}

std::map<std::pair<StateId, StateId>, NtSet> ProductionTable::cells() const
{
	std::map<std::pair<StateId, StateId>, NtSet> out;
	for (const auto &[k, cell] : cells_)
		if (!cell.empty())
			out.emplace(std::pair{static_cast<StateId>(k >> 32), static_cast<StateId>(k & 0xffffffffU)}, cell);
	return out;
}

History embed_failed(const History &h)
{
	require_stack(h);
	History out = h;
	std::unordered_set<std::string> ids;
	for (auto &op : out.ops) {
		ids.insert(op.id);
		if (op.value.is_empty()) {
			op.method = Method::Peek;
			op.value = Value::bottom();
		}
	}
	if (out.ops.empty())
		return out;

	auto t_min = out.ops.front().inv;
	for (const auto &op : out.ops)
		t_min = std::min(t_min, op.inv);
	if (t_min < TimeStamp(2)) {
		const auto shift = TimeStamp(2) - t_min;
		for (auto &op : out.ops) {
			op.inv = op.inv + shift;
			op.res = op.res + shift;
		}
		t_min = TimeStamp(2);
	}
	Operation bottom;
	bottom.id = unique_id("bot", ids);
	bottom.method = Method::Push;
	bottom.value = Value::bottom();
	bottom.inv = t_min - TimeStamp(2);
	bottom.res = t_min - TimeStamp(1);
	out.ops.push_back(std::move(bottom));
	return out;
}

History mirror_close(const History &h)
{
	require_stack(h);
	History out = h;
	if (h.ops.empty())
		return out;
	std::unordered_set<std::string> ids;
	auto pivot = h.ops.front().res;
	for (const auto &op : h.ops) {
		ids.insert(op.id);
		pivot = std::max(pivot, op.res);
	}
	// reflect around pivot + 1, which lands every copy after every original
	const auto axis = (pivot + TimeStamp(1)) * TimeStamp(2);
	for (const auto &op : h.ops) {
		Operation m = op;
		m.id = unique_id(op.id + "~", ids);
		if (op.value.is_empty())
			m.method = Method::Peek; // a failed op only observes emptiness
		else if (op.method == Method::Push)
			m.method = Method::Pop;
		else if (op.method == Method::Pop)
			m.method = Method::Push;
		m.inv = axis - op.res;
		m.res = axis - op.inv;
		out.ops.push_back(std::move(m));
	}
	return out;
}

ProductionTable one_step_matrix(const History &h, const FrontierGraph &g)
{
	ProductionTable table;
	const auto pops = pops_by_value(h);
	for (StateId s = 0; s < g.state_count(); ++s)
		for (const auto &e : g.successors(s))
			if (auto nt = leaf_symbol(h, g, e.op, e.target, pops))
				table.insert(s, e.target, *nt);
	return table;
}

ProductionTable closure(const ProductionTable &one_step, const FrontierGraph &g)
{
	ProductionTable current = one_step;
	for (;;) {
		auto cells = current.cells();
		std::vector<std::vector<std::pair<StateId, const NtSet *>>> rows(g.state_count());
		for (const auto &[pair, cell] : cells)
			rows[pair.first].push_back({pair.second, &cell});

		bool changed = false;
		ProductionTable next = current;
		for (StateId from = 0; from < g.state_count(); ++from)
			for (const auto &[mid, left] : rows[from])
				for (const auto &[to, right] : rows[mid])
					for (const auto &nt : nt_product(*left, *right))
						changed |= next.insert(from, to, nt);
		if (!changed)
			return current;
		current = std::move(next);
	}
}

StackRecognizer::StackRecognizer(const History &prepared)
	: history_(prepared), graph_(FrontierGraph::build(prepared))
{
	require_stack(history_);
	if (history_.ops.empty())
		throw std::invalid_argument("stack recognition requires a non-empty history");
	fill();
}

void StackRecognizer::record(StateId from, StateId to, NonTerminal nt, Back back)
{
	back_.emplace(std::tuple{from, to, nt}, back);
}

void StackRecognizer::fill()
{
	struct Entry {
		StateId to;
		NonTerminal nt;
	};
	const auto states = graph_.state_count();
	std::vector<std::vector<Entry>> by_start(states);
	const auto pops = pops_by_value(history_);

	for (StateId s = 0; s < states; ++s)
		for (const auto &e : graph_.successor_span(s))
			if (auto nt = leaf_symbol(history_, graph_, e.op, e.target, pops)) {
				table_.insert(s, e.target, *nt);
				by_start[s].push_back({e.target, *nt});
				record(s, e.target, *nt, {e.target, *nt, *nt, e.op});
			}

	auto diff = [&](StateId from, StateId to) { return graph_.state_size(to) - graph_.state_size(from); };

	struct Pending {
		StateId from;
		Entry entry;
	};
	const auto total = history_.ops.size();
	for (std::size_t width = 2; width <= total; ++width) {
		std::vector<Pending> pending;
		for (StateId from = 0; from < states; ++from) {
			for (const auto &left : by_start[from]) {
				const auto left_width = diff(from, left.to);
				if (left_width >= width)
					break;
				if (!left.nt.is_left())
					continue;
				const auto right_width = width - left_width;
				// entries of a row are appended in nondecreasing width
				const auto &row = by_start[left.to];
				auto first = std::partition_point(row.begin(), row.end(), [&](const Entry &e) {
					return diff(left.to, e.to) < right_width;
				});
				for (auto it = first; it != row.end() && diff(left.to, it->to) == right_width; ++it) {
					auto produced = combine(left.nt, it->nt);
					if (!produced || !table_.insert(from, it->to, *produced))
						continue;
					pending.push_back({from, {it->to, *produced}});
					record(from, it->to, *produced, {left.to, left.nt, it->nt, 0});
				}
			}
		}
		for (const auto &p : pending)
			by_start[p.from].push_back(p.entry);
	}

	for (const auto &[pair, cell] : table_.cells()) {
		auto rights = static_cast<std::size_t>(std::count_if(
			cell.begin(), cell.end(), [](const NonTerminal &nt) { return nt.kind == NonTerminal::Kind::T; }));
		max_right_symbols_ = std::max(max_right_symbols_, rights);
	}
}

bool StackRecognizer::accepts() const
{
	return table_.contains(graph_.empty_state(), graph_.full_state(), NonTerminal::t_eps());
}

std::vector<OpIndex> StackRecognizer::derivation_order() const
{
	std::vector<OpIndex> out;
	if (!accepts())
		return out;
	struct Item {
		StateId from;
		StateId to;
		NonTerminal nt;
	};
	std::vector<Item> todo{{graph_.empty_state(), graph_.full_state(), NonTerminal::t_eps()}};
	while (!todo.empty()) {
		auto item = todo.back();
		todo.pop_back();
		const auto &back = back_.at({item.from, item.to, item.nt});
		if (back.mid == item.to) {
			out.push_back(back.leaf);
			continue;
		}
		// right first so that the left subtree is expanded next
		todo.push_back({back.mid, item.to, back.right});
		todo.push_back({item.from, back.mid, back.left});
	}
	return out;
}

Verdict stack_check(const History &h, StackOptions options)
{
	require_stack(h);
	Verdict verdict;
	if (h.ops.empty()) {
		verdict.linearizable = true;
		if (options.want_witness)
			verdict.witness = std::vector<WitnessEntry>{};
		return verdict;
	}
	StackRecognizer recognizer(mirror_close(embed_failed(h)));
	verdict.linearizable = recognizer.accepts();
	verdict.states_visited = recognizer.graph().state_count();
	if (verdict.linearizable && options.want_witness) {
		std::vector<OpIndex> order;
		for (auto op : recognizer.derivation_order())
			if (op < h.ops.size())
				order.push_back(op);
		verdict.witness = assign_timestamps(h, order);
	}
	return verdict;
}

} // namespace linmon
