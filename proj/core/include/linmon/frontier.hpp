#pragma once

#include "linmon/history.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace linmon {

/// Position of an operation inside History::ops.
using OpIndex = std::uint32_t;
using StateId = std::uint32_t;

/// Canonical sorted member list of a partition state.
struct PartitionState {
	std::vector<OpIndex> members;

	[[nodiscard]] std::size_t size() const { return members.size(); }
	friend auto operator<=>(const PartitionState &, const PartitionState &) = default;
};

/// True iff every member was invoked strictly before every non-member responded, i.e. the set
/// is the prefix of some order that can be timestamped inside the intervals.
[[nodiscard]] bool is_partition_state(const History &h, std::span<const OpIndex> members);

/// Same test addressed by operation ids. Throws HistoryError on an unknown id.
[[nodiscard]] bool is_partition_state(const History &h, std::span<const std::string> ids);

struct Edge {
	OpIndex op;
	StateId target;

	friend bool operator==(const Edge &, const Edge &) = default;
};

/// DAG of partition states with one edge per single-operation extension.
///
/// A non-empty state S is stored by its canonical gap, the open interval directly after
/// max inv(S), together with a bitmask over the operations live in that gap. Every member
/// responding before the gap is implied. Each state therefore has exactly one encoding and
/// no hashing is needed to deduplicate.
class FrontierGraph {
public:
	struct Options {
		/// Build CSR successor lists eagerly. Without it successors are computed per query.
		bool materialize_edges = true;
	};

	/// Throws std::length_error when more than 62 operations overlap a gap.
	static FrontierGraph build(const History &h, Options options);
	static FrontierGraph build(const History &h) { return build(h, Options{}); }

	[[nodiscard]] std::size_t op_count() const { return inv_.size(); }
	[[nodiscard]] std::size_t state_count() const { return state_gap_.size(); }
	[[nodiscard]] std::size_t edge_count() const;
	[[nodiscard]] StateId empty_state() const { return 0; }
	[[nodiscard]] StateId full_state() const { return full_; }

	[[nodiscard]] std::size_t state_size(StateId s) const;
	[[nodiscard]] bool contains(StateId s, OpIndex op) const;
	[[nodiscard]] PartitionState members(StateId s) const;

	/// S ∪ {op} when that is a partition state.
	[[nodiscard]] std::optional<StateId> extend(StateId s, OpIndex op) const;

	/// Out-edges sorted by operation index. Throws std::out_of_range for an unknown state.
	[[nodiscard]] std::vector<Edge> successors(StateId s) const;
	/// Zero-copy variant; requires materialized edges.
	[[nodiscard]] std::span<const Edge> successor_span(StateId s) const;
	[[nodiscard]] bool has_materialized_edges() const { return !edge_offsets_.empty(); }

	[[nodiscard]] std::optional<StateId> find(std::span<const OpIndex> members) const;

	/// Normalized endpoint ranks the graph was built from.
	[[nodiscard]] std::uint32_t inv_rank(OpIndex op) const { return inv_[op]; }
	[[nodiscard]] std::uint32_t res_rank(OpIndex op) const { return res_[op]; }

private:
	using Mask = std::uint64_t;

	[[nodiscard]] std::optional<StateId> lookup(std::uint32_t gap, Mask mask) const;
	[[nodiscard]] std::vector<Edge> compute_successors(StateId s) const;
	[[nodiscard]] int free_position(std::uint32_t gap, OpIndex op) const;

	std::vector<std::uint32_t> inv_;
	std::vector<std::uint32_t> res_;
	std::vector<OpIndex> by_inv_;                 // ops sorted by inv rank
	std::vector<std::uint32_t> by_inv_start_;     // first position in by_inv_ with inv >= r
	std::vector<std::uint32_t> min_res_from_inv_; // min res over ops with inv >= r

	// gap g >= 1 is the open interval right after endpoint rank g-1; gap 0 precedes everything
	std::vector<std::uint32_t> free_offsets_;
	std::vector<OpIndex> free_ops_;
	std::vector<std::uint32_t> required_count_;
	std::vector<std::uint32_t> gap_state_offsets_;

	std::vector<std::uint32_t> state_gap_;
	std::vector<Mask> state_mask_;
	StateId full_ = 0;

	std::vector<std::uint32_t> edge_offsets_;
	std::vector<Edge> edges_;
};

/// Every partition state, ordered by (size, members).
[[nodiscard]] std::vector<PartitionState> enumerate_partition_states(const History &h);

/// Out-edges of a state given by its members. Throws std::out_of_range if not a state.
[[nodiscard]] std::vector<Edge> successors(const FrontierGraph &g, const PartitionState &s);

/// Graphviz rendering; node label = sorted operation ids, edge label = extending operation.
[[nodiscard]] std::string to_dot(const FrontierGraph &g, const History &h);

} // namespace linmon
