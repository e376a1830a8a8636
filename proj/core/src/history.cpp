#include "linmon/history.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>
#include <utility>

namespace linmon {

namespace {

constexpr std::array<std::pair<AdtKind, std::string_view>, 9> kKindNames{{
	{AdtKind::Stack, "stack"},
	{AdtKind::Queue, "queue"},
	{AdtKind::PriorityQueue, "priority-queue"},
	{AdtKind::Depq, "depq"},
	{AdtKind::Set, "set"},
	{AdtKind::Multiset, "multiset"},
	{AdtKind::Counter, "counter"},
	{AdtKind::RmwRegister, "rmw-register"},
	{AdtKind::SizedStack, "sized-stack"},
}};

constexpr std::array<std::pair<Method, std::string_view>, 14> kMethodNames{{
	{Method::Push, "push"},
	{Method::Pop, "pop"},
	{Method::Peek, "peek"},
	{Method::Enq, "enq"},
	{Method::Deq, "deq"},
	{Method::DeqMin, "deq-min"},
	{Method::PeekMin, "peek-min"},
	{Method::Inc, "inc"},
	{Method::Dec, "dec"},
	{Method::Read, "read"},
	{Method::Add, "add"},
	{Method::Remove, "remove"},
	{Method::Contains, "contains"},
	{Method::Rmw, "rmw"},
}};

enum class ValueRule { Concrete, ConcreteOrEmpty, None };
enum class AuxRule { Forbidden, OptionalBool, RequiredBool, OptionalInt, RequiredInt };

ValueRule value_rule(Method m)
{
	switch (m) {
	case Method::Push:
	case Method::Enq:
	case Method::Add:
	case Method::Remove:
	case Method::Contains:
	case Method::Rmw:
	case Method::Read:
		return ValueRule::Concrete;
	case Method::Pop:
	case Method::Peek:
	case Method::Deq:
	case Method::DeqMin:
	case Method::PeekMin:
		return ValueRule::ConcreteOrEmpty;
	case Method::Inc:
	case Method::Dec:
		return ValueRule::None;
	}
	return ValueRule::None;
}

AuxRule aux_rule(AdtKind kind, Method m)
{
	switch (kind) {
	case AdtKind::Set:
	case AdtKind::Multiset:
		return m == Method::Contains ? AuxRule::RequiredBool : AuxRule::OptionalBool;
	case AdtKind::SizedStack:
		return AuxRule::OptionalInt;
	case AdtKind::RmwRegister:
		return AuxRule::RequiredInt;
	default:
		return AuxRule::Forbidden;
	}
}

} // namespace

std::string_view to_string(AdtKind kind)
{
	for (const auto &[k, name] : kKindNames)
		if (k == kind)
			return name;
	return "?";
}

std::string_view to_string(Method method)
{
	for (const auto &[m, name] : kMethodNames)
		if (m == method)
			return name;
	return "?";
}

std::optional<AdtKind> parse_adt_kind(std::string_view name)
{
	for (const auto &[k, n] : kKindNames)
		if (n == name)
			return k;
	return std::nullopt;
}

std::optional<Method> parse_method(std::string_view name)
{
	for (const auto &[m, n] : kMethodNames)
		if (n == name)
			return m;
	return std::nullopt;
}

const std::vector<AdtKind> &all_kinds()
{
	static const std::vector<AdtKind> kinds = [] {
		std::vector<AdtKind> out;
		for (const auto &[k, name] : kKindNames)
			out.push_back(k);
		return out;
	}();
	return kinds;
}

bool is_anagram_agnostic(AdtKind kind)
{
	return kind != AdtKind::Stack && kind != AdtKind::Queue;
}

bool method_allowed(AdtKind kind, Method method)
{
	switch (kind) {
	case AdtKind::Stack:
	case AdtKind::SizedStack:
		return method == Method::Push || method == Method::Pop || method == Method::Peek;
	case AdtKind::Queue:
	case AdtKind::PriorityQueue:
		return method == Method::Enq || method == Method::Deq || method == Method::Peek;
	case AdtKind::Depq:
		return method == Method::Enq || method == Method::Deq || method == Method::Peek ||
		       method == Method::DeqMin || method == Method::PeekMin;
	case AdtKind::Set:
	case AdtKind::Multiset:
		return method == Method::Add || method == Method::Remove || method == Method::Contains;
	case AdtKind::Counter:
		return method == Method::Inc || method == Method::Dec || method == Method::Read;
	case AdtKind::RmwRegister:
		return method == Method::Rmw;
	}
	return false;
}

std::string Value::to_string() const
{
	switch (tag_) {
	case Tag::Empty:
		return "eps";
	case Tag::Bottom:
		return "bot";
	case Tag::Concrete:
		break;
	}
	return std::to_string(value_);
}

std::vector<Violation> validate_history(const History &h)
{
	std::vector<Violation> out;
	std::unordered_set<std::string> seen;
	for (const auto &op : h.ops) {
		if (!seen.insert(op.id).second)
			out.push_back({"duplicate id", op.id});
		if (!method_allowed(h.kind, op.method))
			out.push_back({"method '" + std::string(to_string(op.method)) + "' illegal for kind '" +
			                       std::string(to_string(h.kind)) + "'",
			               op.id});
		if (op.inv < TimeStamp(0))
			out.push_back({"negative time", op.id});
		if (!(op.inv < op.res))
			out.push_back({"inv >= res", op.id});

		switch (value_rule(op.method)) {
		case ValueRule::Concrete:
			// push(bot) is produced by preprocessing and is the only non-concrete exception
			if (!op.value.is_concrete() && !(op.method == Method::Push && op.value.is_bottom()))
				out.push_back({"method requires a value", op.id});
			break;
		case ValueRule::ConcreteOrEmpty:
			break;
		case ValueRule::None:
			if (!op.value.is_empty())
				out.push_back({"method takes no value", op.id});
			break;
		}

		const bool is_bool = op.aux && std::holds_alternative<bool>(*op.aux);
		const bool is_int = op.aux && std::holds_alternative<std::int64_t>(*op.aux);
		switch (aux_rule(h.kind, op.method)) {
		case AuxRule::Forbidden:
			if (op.aux)
				out.push_back({"aux not allowed", op.id});
			break;
		case AuxRule::OptionalBool:
			if (is_int)
				out.push_back({"aux must be boolean", op.id});
			break;
		case AuxRule::RequiredBool:
			if (!is_bool)
				out.push_back({"aux must be boolean", op.id});
			break;
		case AuxRule::OptionalInt:
			if (is_bool)
				out.push_back({"aux must be integer", op.id});
			break;
		case AuxRule::RequiredInt:
			if (!is_int)
				out.push_back({"aux must be integer", op.id});
			break;
		}
	}
	return out;
}

void require_valid(const History &h)
{
	auto violations = validate_history(h);
	if (!violations.empty())
		throw HistoryError(violations.front().invariant, violations.front().op_id);
}

std::vector<TimeStamp> distinct_endpoints(const History &h)
{
	std::vector<TimeStamp> out;
	out.reserve(2 * h.ops.size());
	for (const auto &op : h.ops) {
		out.push_back(op.inv);
		out.push_back(op.res);
	}
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

std::size_t concurrency_width(const History &h)
{
	// closed intervals: at equal times, openings are counted before closings
	std::vector<std::pair<TimeStamp, int>> events;
	events.reserve(2 * h.ops.size());
	for (const auto &op : h.ops) {
		events.emplace_back(op.inv, 0);
		events.emplace_back(op.res, 1);
	}
	std::sort(events.begin(), events.end());
	std::size_t active = 0;
	std::size_t best = 0;
	for (const auto &[t, kind] : events) {
		if (kind == 0) {
			++active;
			best = std::max(best, active);
		} else {
			--active;
		}
	}
	return best;
}

History normalize_times(const History &h)
{
	auto endpoints = distinct_endpoints(h);
	auto rank = [&](const TimeStamp &t) {
		return static_cast<std::int64_t>(std::lower_bound(endpoints.begin(), endpoints.end(), t) -
		                                 endpoints.begin());
	};
	History out = h;
	for (auto &op : out.ops) {
		op.inv = TimeStamp(rank(op.inv));
		op.res = TimeStamp(rank(op.res));
	}
	return out;
}

std::vector<Value> value_domain(const History &h)
{
	std::vector<Value> out;
	for (const auto &op : h.ops)
		if (!op.value.is_empty())
			out.push_back(op.value);
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

} // namespace linmon
