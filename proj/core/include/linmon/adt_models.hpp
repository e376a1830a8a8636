#pragma once

#include "linmon/history.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace linmon {

/// An operation stripped of its identity and timing.
struct AbstractOperation {
	Method method = Method::Push;
	Value value;
	std::optional<Aux> aux;

	static AbstractOperation of(const Operation &op) { return {op.method, op.value, op.aux}; }
	friend bool operator==(const AbstractOperation &, const AbstractOperation &) = default;
};

/// Sequential object with an undo journal. apply() only mutates on success; undo() reverts
/// the most recent successful apply().
class SimulatedObject {
public:
	virtual ~SimulatedObject() = default;

	[[nodiscard]] virtual AdtKind kind() const = 0;
	/// True iff the current state admits op with exactly its recorded value and aux.
	virtual bool apply(const AbstractOperation &op) = 0;
	/// Throws std::logic_error when nothing is left to undo.
	virtual void undo() = 0;
	[[nodiscard]] virtual std::size_t journal_size() const = 0;
	/// Canonical encoding of the abstract state.
	[[nodiscard]] virtual std::string fingerprint() const = 0;
};

/// Fresh object in the kind's initial state. The priority queues are max-first; the rmw
/// register starts at 0.
[[nodiscard]] std::unique_ptr<SimulatedObject> new_object(AdtKind kind);

/// Folds apply() over the sequence from the initial state.
[[nodiscard]] bool sequence_member(AdtKind kind, std::span<const AbstractOperation> sequence);

} // namespace linmon
