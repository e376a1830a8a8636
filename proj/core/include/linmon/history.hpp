#pragma once

#include "linmon/time.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace linmon {

enum class AdtKind : std::uint8_t {
	Stack,
	Queue,
	PriorityQueue,
	Depq,
	Set,
	Multiset,
	Counter,
	RmwRegister,
	SizedStack,
};

enum class Method : std::uint8_t {
	Push,
	Pop,
	Peek,
	Enq,
	Deq,
	DeqMin,
	PeekMin,
	Inc,
	Dec,
	Read,
	Add,
	Remove,
	Contains,
	Rmw,
};

[[nodiscard]] std::string_view to_string(AdtKind kind);
[[nodiscard]] std::string_view to_string(Method method);
[[nodiscard]] std::optional<AdtKind> parse_adt_kind(std::string_view name);
[[nodiscard]] std::optional<Method> parse_method(std::string_view name);

/// Kinds whose legal permutations of the same operations reach the same state.
[[nodiscard]] bool is_anagram_agnostic(AdtKind kind);
[[nodiscard]] bool method_allowed(AdtKind kind, Method method);
[[nodiscard]] const std::vector<AdtKind> &all_kinds();

/// Argument of an operation: a concrete integer, the failed-operation marker, or the
/// sentinel introduced by stack preprocessing.
class Value {
public:
	enum class Tag : std::uint8_t { Empty, Concrete, Bottom };

	constexpr Value() = default;
	static constexpr Value concrete(std::int64_t v) { return Value(Tag::Concrete, v); }
	static constexpr Value empty() { return Value(Tag::Empty, 0); }
	static constexpr Value bottom() { return Value(Tag::Bottom, 0); }

	[[nodiscard]] constexpr Tag tag() const { return tag_; }
	[[nodiscard]] constexpr bool is_concrete() const { return tag_ == Tag::Concrete; }
	[[nodiscard]] constexpr bool is_empty() const { return tag_ == Tag::Empty; }
	[[nodiscard]] constexpr bool is_bottom() const { return tag_ == Tag::Bottom; }
	/// Only meaningful for concrete values.
	[[nodiscard]] constexpr std::int64_t get() const { return value_; }

	friend constexpr auto operator<=>(const Value &, const Value &) = default;

	[[nodiscard]] std::string to_string() const;

private:
	constexpr Value(Tag tag, std::int64_t v) : tag_(tag), value_(v) {}

	Tag tag_ = Tag::Empty;
	std::int64_t value_ = 0;
};

/// Observed result attached to an operation (set success flags, stack sizes, rmw pre-values).
using Aux = std::variant<std::int64_t, bool>;

struct Operation {
	std::string id;
	Method method = Method::Push;
	Value value;
	std::optional<Aux> aux;
	TimeStamp inv;
	TimeStamp res;

	friend bool operator==(const Operation &, const Operation &) = default;
};

/// A finite set of operations on a single object of one ADT kind.
struct History {
	AdtKind kind = AdtKind::Stack;
	std::vector<Operation> ops;

	[[nodiscard]] std::size_t size() const { return ops.size(); }
	[[nodiscard]] bool empty() const { return ops.empty(); }

	friend bool operator==(const History &, const History &) = default;
};

/// Input error pinned to an operation (empty op_id for document-level problems).
class HistoryError : public std::runtime_error {
public:
	HistoryError(const std::string &message, std::string op_id = {})
		: std::runtime_error(op_id.empty() ? message : "operation '" + op_id + "': " + message),
		  op_id_(std::move(op_id))
	{}

	[[nodiscard]] const std::string &op_id() const { return op_id_; }

private:
	std::string op_id_;
};

struct Violation {
	std::string invariant;
	std::string op_id;

	friend bool operator==(const Violation &, const Violation &) = default;
};

/// Every broken Operation/History invariant; empty iff the history is well formed.
[[nodiscard]] std::vector<Violation> validate_history(const History &h);

/// Throws HistoryError on the first violation.
void require_valid(const History &h);

/// Sorted distinct invocation/response times.
[[nodiscard]] std::vector<TimeStamp> distinct_endpoints(const History &h);

/// Maximum number of operations whose closed interval contains a common time.
[[nodiscard]] std::size_t concurrency_width(const History &h);

/// Replaces every endpoint by its dense rank among the distinct endpoints.
[[nodiscard]] History normalize_times(const History &h);

/// Distinct values a history mentions (concrete and bottom), sorted.
[[nodiscard]] std::vector<Value> value_domain(const History &h);

} // namespace linmon

template <>
struct std::hash<linmon::Value> {
	std::size_t operator()(const linmon::Value &v) const noexcept
	{
		return std::hash<std::int64_t>{}(v.get()) * 3 + static_cast<std::size_t>(v.tag());
	}
};
