#include "linmon/generator.hpp"

#include "linmon/adt_models.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>

namespace linmon {

namespace {

using Rng = std::mt19937_64;

bool chance(Rng &rng, double p)
{
	return std::bernoulli_distribution(p)(rng);
}

std::int64_t pick(Rng &rng, std::int64_t lo, std::int64_t hi)
{
	return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Mirror of the abstract state, used to propose operations that are legal by construction.
class Proposer {
public:
	Proposer(AdtKind kind, std::int64_t range, double failure_rate)
		: kind_(kind), range_(range), failure_rate_(failure_rate)
	{}

	AbstractOperation next(Rng &rng)
	{
		switch (kind_) {
		case AdtKind::Stack:
		case AdtKind::SizedStack:
			return next_stack(rng);
		case AdtKind::Queue:
			return next_queue(rng);
		case AdtKind::PriorityQueue:
		case AdtKind::Depq:
			return next_priority(rng);
		case AdtKind::Set:
		case AdtKind::Multiset:
			return next_set(rng);
		case AdtKind::Counter:
			return next_counter(rng);
		case AdtKind::RmwRegister:
			return next_rmw(rng);
		}
		throw std::invalid_argument("unknown ADT kind");
	}

private:
	Value random_value(Rng &rng) const { return Value::concrete(pick(rng, 1, range_)); }

	AbstractOperation next_stack(Rng &rng)
	{
		const bool sized = kind_ == AdtKind::SizedStack;
		auto with_size = [&](AbstractOperation op, std::size_t size) {
			if (sized)
				op.aux = static_cast<std::int64_t>(size);
			return op;
		};
		const auto roll = pick(rng, 0, 99);
		if (roll < 45 || (stack_.empty() && !chance(rng, failure_rate_))) {
			auto v = random_value(rng);
			stack_.push_back(v);
			return with_size({Method::Push, v, {}}, stack_.size());
		}
		const auto method = roll < 80 ? Method::Pop : Method::Peek;
		if (stack_.empty())
			return with_size({method, Value::empty(), {}}, 0);
		auto top = stack_.back();
		auto size = stack_.size();
		if (method == Method::Pop)
			stack_.pop_back();
		return with_size({method, top, {}}, size);
	}

	AbstractOperation next_queue(Rng &rng)
	{
		const auto roll = pick(rng, 0, 99);
		if (roll < 45 || (queue_.empty() && !chance(rng, failure_rate_))) {
			auto v = random_value(rng);
			queue_.push_back(v);
			return {Method::Enq, v, {}};
		}
		if (queue_.empty())
			return {Method::Deq, Value::empty(), {}};
		auto front = queue_.front();
		if (roll < 80) {
			queue_.pop_front();
			return {Method::Deq, front, {}};
		}
		return {Method::Peek, front, {}};
	}

	AbstractOperation next_priority(Rng &rng)
	{
		const bool double_ended = kind_ == AdtKind::Depq;
		const auto roll = pick(rng, 0, 99);
		if (roll < 45 || (bag_.empty() && !chance(rng, failure_rate_))) {
			auto v = random_value(rng);
			++bag_[v.get()];
			return {Method::Enq, v, {}};
		}
		const bool removes = roll < 80;
		const bool min_side = double_ended && chance(rng, 0.5);
		const auto method = removes ? (min_side ? Method::DeqMin : Method::Deq)
		                            : (min_side ? Method::PeekMin : Method::Peek);
		if (bag_.empty())
			return {method, Value::empty(), {}};
		auto it = min_side ? bag_.begin() : std::prev(bag_.end());
		auto v = it->first;
		if (removes && --it->second == 0)
			bag_.erase(it);
		return {method, Value::concrete(v), {}};
	}

	AbstractOperation next_set(Rng &rng)
	{
		const bool multi = kind_ == AdtKind::Multiset;
		auto v = random_value(rng);
		auto &count = bag_[v.get()];
		const bool present = count > 0;
		const auto roll = pick(rng, 0, 99);
		AbstractOperation op;
		if (roll < 45) {
			op = {Method::Add, v, multi || !present};
			if (multi || !present)
				++count;
		} else if (roll < 80) {
			op = {Method::Remove, v, present};
			if (present)
				--count;
		} else {
			op = {Method::Contains, v, present};
		}
		if (count == 0)
			bag_.erase(v.get());
		return op;
	}

	AbstractOperation next_counter(Rng &rng)
	{
		const auto roll = pick(rng, 0, 99);
		if (roll < 40) {
			++counter_;
			return {Method::Inc, Value::empty(), {}};
		}
		if (roll < 70) {
			--counter_;
			return {Method::Dec, Value::empty(), {}};
		}
		return {Method::Read, Value::concrete(counter_), {}};
	}

	AbstractOperation next_rmw(Rng &rng)
	{
		auto observed = counter_;
		counter_ = pick(rng, 0, range_);
		return {Method::Rmw, Value::concrete(counter_), observed};
	}

	AdtKind kind_;
	std::int64_t range_;
	double failure_rate_;
	std::vector<Value> stack_;
	std::deque<Value> queue_;
	std::map<std::int64_t, std::size_t> bag_;
	std::int64_t counter_ = 0;
};

} // namespace

History gen_history(AdtKind kind, std::size_t n, std::size_t k_target, std::uint64_t seed, GenOptions options)
{
	if (k_target == 0)
		throw std::invalid_argument("gen_history: k_target must be at least 1");
	if (n > 0 && k_target > n)
		throw std::invalid_argument("gen_history: k_target exceeds the number of operations");

	Rng rng(seed);
	const auto range = options.value_range > 0 ? options.value_range
	                                           : std::max<std::int64_t>(2, static_cast<std::int64_t>(n / 2));
	Proposer proposer(kind, range, options.failure_rate);
	auto object = new_object(kind);

	// operation i is linearized at 4i + 2 and starts out as [4i + 1, 4i + 3]
	std::vector<AbstractOperation> sequence;
	std::vector<std::int64_t> inv(n);
	std::vector<std::int64_t> res(n);
	for (std::size_t i = 0; i < n; ++i) {
		auto op = proposer.next(rng);
		if (!object->apply(op))
			throw std::logic_error("gen_history: proposer produced an illegal operation");
		sequence.push_back(op);
		inv[i] = static_cast<std::int64_t>(4 * i + 1);
		res[i] = static_cast<std::int64_t>(4 * i + 3);
	}

	const auto horizon = static_cast<std::int64_t>(4 * n + 4);
	std::vector<std::size_t> cover(static_cast<std::size_t>(horizon) + 1, 0);
	for (std::size_t i = 0; i < n; ++i)
		for (auto t = inv[i]; t <= res[i]; ++t)
			++cover[static_cast<std::size_t>(t)];

	const auto reach = static_cast<std::int64_t>(8 * k_target);
	const auto attempts = static_cast<std::size_t>(options.widen_attempts) * n;
	for (std::size_t a = 0; a < attempts && n > 1; ++a) {
		const auto i = static_cast<std::size_t>(pick(rng, 0, static_cast<std::int64_t>(n) - 1));
		const auto length = pick(rng, 1, reach);
		std::int64_t lo = 0;
		std::int64_t hi = 0;
		if (chance(rng, 0.5)) {
			lo = std::max<std::int64_t>(0, inv[i] - length);
			hi = inv[i] - 1;
		} else {
			lo = res[i] + 1;
			hi = std::min(horizon, res[i] + length);
		}
		if (lo > hi)
			continue;
		bool fits = true;
		for (auto t = lo; t <= hi && fits; ++t)
			fits = cover[static_cast<std::size_t>(t)] + 1 <= k_target;
		if (!fits)
			continue;
		for (auto t = lo; t <= hi; ++t)
			++cover[static_cast<std::size_t>(t)];
		if (lo < inv[i])
			inv[i] = lo;
		else
			res[i] = hi;
	}

	// shuffle storage order so that engines exploring by index do not see the generating order
	std::vector<std::size_t> slot(n);
	for (std::size_t i = 0; i < n; ++i)
		slot[i] = i;
	std::shuffle(slot.begin(), slot.end(), rng);

	History h;
	h.kind = kind;
	h.ops.resize(n);
	for (std::size_t i = 0; i < n; ++i) {
		auto &op = h.ops[slot[i]];
		op.id = "o" + std::to_string(slot[i]);
		op.method = sequence[i].method;
		op.value = sequence[i].value;
		op.aux = sequence[i].aux;
		op.inv = TimeStamp(inv[i]);
		op.res = TimeStamp(res[i]);
	}
	return h;
}

namespace {

std::optional<Method> flipped(AdtKind kind, Method m)
{
	switch (m) {
	case Method::Push:
		return Method::Pop;
	case Method::Pop:
		return Method::Push;
	case Method::Enq:
		return Method::Deq;
	case Method::Deq:
		return Method::Enq;
	case Method::Peek:
		return kind == AdtKind::Stack || kind == AdtKind::SizedStack ? Method::Pop : Method::Deq;
	case Method::DeqMin:
		return Method::Deq;
	case Method::PeekMin:
		return Method::Peek;
	case Method::Inc:
		return Method::Dec;
	case Method::Dec:
		return Method::Inc;
	case Method::Add:
		return Method::Remove;
	case Method::Remove:
		return Method::Add;
	case Method::Contains:
	case Method::Read:
	case Method::Rmw:
		return std::nullopt;
	}
	return std::nullopt;
}

std::string describe(const Operation &op)
{
	return op.id + " " + std::string(to_string(op.method)) + "(" + op.value.to_string() + ")";
}

} // namespace

Mutation mutate_history(const History &h, std::uint64_t seed)
{
	if (h.ops.empty())
		throw std::invalid_argument("mutate_history: nothing to mutate in an empty history");
	Rng rng(seed);
	std::int64_t lo = 1;
	std::int64_t hi = 1;
	for (const auto &op : h.ops)
		if (op.value.is_concrete()) {
			lo = std::min(lo, op.value.get());
			hi = std::max(hi, op.value.get());
		}
	auto any_op = [&] { return static_cast<std::size_t>(pick(rng, 0, static_cast<std::int64_t>(h.ops.size()) - 1)); };

	for (int attempt = 0; attempt < 64; ++attempt) {
		Mutation m{h, {}};
		auto &ops = m.history.ops;
		const auto i = any_op();
		switch (pick(rng, 0, 3)) {
		case 0: {
			const auto j = any_op();
			if (i == j || ops[i].value == ops[j].value)
				continue;
			std::swap(ops[i].value, ops[j].value);
			m.description = "swap values of " + ops[i].id + " and " + ops[j].id;
			break;
		}
		case 1: {
			auto to = flipped(h.kind, ops[i].method);
			if (!to || !method_allowed(h.kind, *to))
				continue;
			m.description = "flip " + describe(ops[i]) + " to " + std::string(to_string(*to));
			ops[i].method = *to;
			if (ops[i].method == Method::Inc || ops[i].method == Method::Dec)
				ops[i].value = Value::empty();
			break;
		}
		case 2: {
			auto before = describe(ops[i]);
			if (ops[i].aux && chance(rng, 0.5)) {
				if (auto *b = std::get_if<bool>(&*ops[i].aux))
					*b = !*b;
				else
					std::get<std::int64_t>(*ops[i].aux) += chance(rng, 0.5) ? 1 : -1;
				m.description = "perturb aux of " + before;
				break;
			}
			auto v = pick(rng, lo - 1, hi + 1);
			const bool may_fail = ops[i].method == Method::Pop || ops[i].method == Method::Deq ||
			                      (ops[i].method == Method::Peek && h.kind != AdtKind::Queue);
			ops[i].value = may_fail && chance(rng, 0.2) ? Value::empty() : Value::concrete(v);
			m.description = "retarget " + before + " to " + ops[i].value.to_string();
			break;
		}
		default: {
			auto &op = ops[i];
			const auto span = op.res - op.inv;
			const auto cut = TimeStamp(pick(rng, 1, 3), 4);
			if (chance(rng, 0.5))
				op.res = op.inv + span * cut;
			else
				op.inv = op.res - span * cut;
			m.description = "shrink interval of " + describe(op) + " to [" + op.inv.to_string() + "," +
			                op.res.to_string() + "]";
			break;
		}
		}
		const bool queue_failed_peek =
			h.kind == AdtKind::Queue && std::any_of(ops.begin(), ops.end(), [](const Operation &o) {
				return o.method == Method::Peek && o.value.is_empty();
			});
		if (!queue_failed_peek && m.history != h && validate_history(m.history).empty())
			return m;
	}
	// shrinking always validates, so fall back to it
	Mutation m{h, {}};
	auto &op = m.history.ops.front();
	op.res = op.inv + (op.res - op.inv) * TimeStamp(1, 2);
	m.description = "shrink interval of " + describe(op);
	return m;
}

} // namespace linmon
