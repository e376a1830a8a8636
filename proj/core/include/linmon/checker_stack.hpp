#pragma once

#include "linmon/frontier.hpp"
#include "linmon/history.hpp"
#include "linmon/verdict.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace linmon {

/// Symbols of the value-parameterized stack grammar:
///
///   T(eps)  -> Push(v) T(v)
///   T(v)    -> Peek(v) T(v) | T(eps) T(v) | pop(v)
///   Push(v) -> push(v)
///   Peek(v) -> peek(v)
struct NonTerminal {
	enum class Kind : std::uint8_t { TEps, T, Push, Peek };

	Kind kind = Kind::TEps;
	Value value; // unused for TEps

	static NonTerminal t_eps() { return {Kind::TEps, Value::empty()}; }
	static NonTerminal t(Value v) { return {Kind::T, v}; }
	static NonTerminal push(Value v) { return {Kind::Push, v}; }
	static NonTerminal peek(Value v) { return {Kind::Peek, v}; }

	/// Symbols that may stand on the left of a binary production.
	[[nodiscard]] bool is_left() const { return kind != Kind::T; }

	friend auto operator<=>(const NonTerminal &, const NonTerminal &) = default;
	[[nodiscard]] std::string to_string() const;
};

using NtSet = std::vector<NonTerminal>; // sorted, unique

/// {P : P -> L R, L in a, R in b}.
[[nodiscard]] NtSet nt_product(const NtSet &a, const NtSet &b);

/// Cells indexed by ordered partition-state pairs; absent cells are empty.
class ProductionTable {
public:
	[[nodiscard]] const NtSet &at(StateId from, StateId to) const;
	bool insert(StateId from, StateId to, NonTerminal nt);
	[[nodiscard]] bool contains(StateId from, StateId to, const NonTerminal &nt) const;
	[[nodiscard]] std::size_t cell_count() const { return cells_.size(); }
	[[nodiscard]] std::size_t symbol_count() const;

	/// Non-empty cells, sorted by (from, to).
	[[nodiscard]] std::map<std::pair<StateId, StateId>, NtSet> cells() const;

	friend bool operator==(const ProductionTable &a, const ProductionTable &b) { return a.cells() == b.cells(); }

private:
	static std::uint64_t key(StateId from, StateId to) { return (std::uint64_t{from} << 32) | to; }

	std::unordered_map<std::uint64_t, NtSet> cells_;
};

/// Rewrites failed operations as peek(bot) and adds a push(bot) that precedes everything.
[[nodiscard]] History embed_failed(const History &h);

/// Adds the time-reflected, push/pop-swapped copy of every operation after the originals,
/// making the history well matched. Ids of the copies get a "~" suffix.
[[nodiscard]] History mirror_close(const History &h);

/// Single-operation cells from the terminal rules. A Push(v)/Peek(v) leaf is kept only when
/// some pop(v) lies outside its target state, since nothing else can close it.
[[nodiscard]] ProductionTable one_step_matrix(const History &h, const FrontierGraph &g);

/// Least fixed point of M := M ∪ M ⊗ M by repeated naive products.
[[nodiscard]] ProductionTable closure(const ProductionTable &one_step, const FrontierGraph &g);

/// Production-table recognition of a non-empty, well-matched, failure-free stack history.
class StackRecognizer {
public:
	explicit StackRecognizer(const History &prepared);

	[[nodiscard]] const History &history() const { return history_; }
	[[nodiscard]] const FrontierGraph &graph() const { return graph_; }
	[[nodiscard]] const ProductionTable &table() const { return table_; }

	[[nodiscard]] bool accepts() const;
	/// Leaf operations of the first derivation of T(eps) over (empty, full), in order.
	[[nodiscard]] std::vector<OpIndex> derivation_order() const;

	/// Largest number of distinct right symbols consumed while filling any single cell.
	[[nodiscard]] std::size_t max_right_symbols() const { return max_right_symbols_; }

private:
	struct Back {
		StateId mid;     // == to for leaves
		NonTerminal left;
		NonTerminal right;
		OpIndex leaf;
	};

	void fill();
	void record(StateId from, StateId to, NonTerminal nt, Back back);

	History history_;
	FrontierGraph graph_;
	ProductionTable table_;
	std::map<std::tuple<StateId, StateId, NonTerminal>, Back> back_;
	std::size_t max_right_symbols_ = 0;
};

struct StackOptions {
	bool want_witness = true;
};

/// Full pipeline: empty histories pass; otherwise embed_failed, mirror_close and recognition.
/// Throws std::invalid_argument for non-stack histories.
[[nodiscard]] Verdict stack_check(const History &h, StackOptions options = {});

} // namespace linmon
