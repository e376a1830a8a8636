#include "linmon/checker_aadt.hpp"

#include "linmon/adt_models.hpp"

#include <stdexcept>

namespace linmon {

Verdict check_aadt(const History &h, AadtOptions options)
{
	if (!is_anagram_agnostic(h.kind))
		throw std::invalid_argument("check_aadt: '" + std::string(to_string(h.kind)) + "' is not anagram agnostic");
	auto graph = FrontierGraph::build(h, {.materialize_edges = false});
	return check_aadt(h, graph, options);
}

Verdict check_aadt(const History &h, const FrontierGraph &graph, AadtOptions options)
{
	if (!is_anagram_agnostic(h.kind))
		throw std::invalid_argument("check_aadt: '" + std::string(to_string(h.kind)) + "' is not anagram agnostic");

	Verdict verdict;
	auto object = new_object(h.kind);
	std::vector<bool> expanded(graph.state_count(), false);

	struct Frame {
		StateId state;
		std::vector<Edge> edges;
		std::size_t next = 0;
	};
	std::vector<Frame> stack;
	std::vector<OpIndex> path;

	stack.push_back({graph.empty_state(), graph.successors(graph.empty_state())});
	expanded[graph.empty_state()] = true;
	verdict.states_visited = 1;

	while (!stack.empty()) {
		auto &frame = stack.back();
		if (frame.state == graph.full_state()) {
			verdict.linearizable = true;
			break;
		}
		if (frame.next == frame.edges.size()) {
			stack.pop_back();
			if (!stack.empty()) {
				object->undo();
				path.pop_back();
			}
			continue;
		}
		const auto edge = frame.edges[frame.next++];
		if (options.memoize && expanded[edge.target])
			continue;
		if (!object->apply(AbstractOperation::of(h.ops[edge.op])))
			continue;
		expanded[edge.target] = true;
		++verdict.states_visited;
		path.push_back(edge.op);
		stack.push_back({edge.target, graph.successors(edge.target)});
	}

	if (verdict.linearizable && options.want_witness)
		verdict.witness = assign_timestamps(h, path);
	return verdict;
}

} // namespace linmon
