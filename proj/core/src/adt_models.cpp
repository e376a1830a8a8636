#include "linmon/adt_models.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace linmon {

namespace {

bool aux_flag(const AbstractOperation &op, bool fallback)
{
	if (!op.aux)
		return fallback;
	if (const auto *b = std::get_if<bool>(&*op.aux))
		return *b;
	return fallback;
}

std::optional<std::int64_t> aux_int(const AbstractOperation &op)
{
	if (!op.aux)
		return std::nullopt;
	if (const auto *i = std::get_if<std::int64_t>(&*op.aux))
		return *i;
	return std::nullopt;
}

template <typename Record>
class Journaled : public SimulatedObject {
public:
	[[nodiscard]] std::size_t journal_size() const override { return journal_.size(); }

	void undo() override
	{
		if (journal_.empty())
			throw std::logic_error("undo on an empty journal");
		revert(journal_.back());
		journal_.pop_back();
	}

protected:
	virtual void revert(const Record &record) = 0;
	bool record(Record r)
	{
		journal_.push_back(std::move(r));
		return true;
	}

private:
	std::vector<Record> journal_;
};

std::string join_values(auto first, auto last, auto &&render)
{
	std::string out = "[";
	bool sep = false;
	for (; first != last; ++first) {
		if (sep)
			out += ',';
		out += render(*first);
		sep = true;
	}
	out += ']';
	return out;
}

class Counter final : public Journaled<std::int64_t> {
public:
	AdtKind kind() const override { return AdtKind::Counter; }

	bool apply(const AbstractOperation &op) override
	{
		switch (op.method) {
		case Method::Inc:
			count_ += 1;
			return record(1);
		case Method::Dec:
			count_ -= 1;
			return record(-1);
		case Method::Read:
			if (!op.value.is_concrete() || op.value.get() != count_)
				return false;
			return record(0);
		default:
			return false;
		}
	}

	std::string fingerprint() const override { return std::to_string(count_); }

private:
	void revert(const std::int64_t &delta) override { count_ -= delta; }

	std::int64_t count_ = 0;
};

/// Counted multiset shared by sets, multisets and both priority queues.
struct Bag {
	std::map<std::int64_t, std::size_t> counts;
	std::size_t total = 0;

	[[nodiscard]] std::size_t count(std::int64_t v) const
	{
		auto it = counts.find(v);
		return it == counts.end() ? 0 : it->second;
	}
	void insert(std::int64_t v)
	{
		++counts[v];
		++total;
	}
	void erase_one(std::int64_t v)
	{
		auto it = counts.find(v);
		if (--it->second == 0)
			counts.erase(it);
		--total;
	}
	[[nodiscard]] std::string render() const
	{
		std::string out = "[";
		bool sep = false;
		for (const auto &[v, c] : counts)
			for (std::size_t i = 0; i < c; ++i) {
				if (sep)
					out += ',';
				out += std::to_string(v);
				sep = true;
			}
		return out + "]";
	}
};

struct BagRecord {
	enum class Kind : std::uint8_t { None, Inserted, Erased } kind;
	std::int64_t value;
};

class BagObject : public Journaled<BagRecord> {
public:
	std::string fingerprint() const override { return bag_.render(); }

protected:
	bool insert(std::int64_t v)
	{
		bag_.insert(v);
		return record({BagRecord::Kind::Inserted, v});
	}
	bool erase(std::int64_t v)
	{
		bag_.erase_one(v);
		return record({BagRecord::Kind::Erased, v});
	}
	bool read_only() { return record({BagRecord::Kind::None, 0}); }

	Bag bag_;

private:
	void revert(const BagRecord &r) override
	{
		if (r.kind == BagRecord::Kind::Inserted)
			bag_.erase_one(r.value);
		else if (r.kind == BagRecord::Kind::Erased)
			bag_.insert(r.value);
	}
};

class SetObject final : public BagObject {
public:
	explicit SetObject(bool multi) : multi_(multi) {}

	AdtKind kind() const override { return multi_ ? AdtKind::Multiset : AdtKind::Set; }

	bool apply(const AbstractOperation &op) override
	{
		if (!op.value.is_concrete())
			return false;
		const auto v = op.value.get();
		const bool present = bag_.count(v) > 0;
		switch (op.method) {
		case Method::Add:
			if (aux_flag(op, true)) {
				if (present && !multi_)
					return false;
				return insert(v);
			}
			// a multiset add never fails; a set add fails exactly when v is present
			if (multi_ || !present)
				return false;
			return read_only();
		case Method::Remove:
			if (aux_flag(op, true))
				return present ? erase(v) : false;
			return present ? false : read_only();
		case Method::Contains:
			if (!op.aux || !std::holds_alternative<bool>(*op.aux) || std::get<bool>(*op.aux) != present)
				return false;
			return read_only();
		default:
			return false;
		}
	}

private:
	bool multi_;
};

class PriorityQueueObject final : public BagObject {
public:
	explicit PriorityQueueObject(bool double_ended) : double_ended_(double_ended) {}

	AdtKind kind() const override { return double_ended_ ? AdtKind::Depq : AdtKind::PriorityQueue; }

	bool apply(const AbstractOperation &op) override
	{
		switch (op.method) {
		case Method::Enq:
			return op.value.is_concrete() ? insert(op.value.get()) : false;
		case Method::Deq:
		case Method::Peek:
		case Method::DeqMin:
		case Method::PeekMin: {
			const bool min_side = op.method == Method::DeqMin || op.method == Method::PeekMin;
			if (min_side && !double_ended_)
				return false;
			const bool removes = op.method == Method::Deq || op.method == Method::DeqMin;
			if (op.value.is_empty())
				return bag_.total == 0 ? read_only() : false;
			if (!op.value.is_concrete() || bag_.total == 0)
				return false;
			const auto extreme = min_side ? bag_.counts.begin()->first : bag_.counts.rbegin()->first;
			if (extreme != op.value.get())
				return false;
			return removes ? erase(extreme) : read_only();
		}
		default:
			return false;
		}
	}

private:
	bool double_ended_;
};

class RmwRegister final : public Journaled<std::int64_t> {
public:
	AdtKind kind() const override { return AdtKind::RmwRegister; }

	bool apply(const AbstractOperation &op) override
	{
		auto observed = aux_int(op);
		if (op.method != Method::Rmw || !op.value.is_concrete() || !observed || *observed != value_)
			return false;
		const auto previous = value_;
		value_ = op.value.get();
		return record(previous);
	}

	std::string fingerprint() const override { return std::to_string(value_); }

private:
	void revert(const std::int64_t &previous) override { value_ = previous; }

	std::int64_t value_ = 0;
};

struct SlotRecord {
	enum class Kind : std::uint8_t { None, Added, Removed } kind;
	Value value;
};

/// Plain and size-reporting stacks.
class StackObject final : public Journaled<SlotRecord> {
public:
	explicit StackObject(bool sized) : sized_(sized) {}

	AdtKind kind() const override { return sized_ ? AdtKind::SizedStack : AdtKind::Stack; }

	bool apply(const AbstractOperation &op) override
	{
		auto size_matches = [&](std::size_t expected) {
			auto reported = aux_int(op);
			return !sized_ || !reported || *reported == static_cast<std::int64_t>(expected);
		};
		switch (op.method) {
		case Method::Push:
			if (op.value.is_empty() || !size_matches(items_.size() + 1))
				return false;
			items_.push_back(op.value);
			return record({SlotRecord::Kind::Added, op.value});
		case Method::Pop:
		case Method::Peek: {
			if (!size_matches(items_.size()))
				return false;
			if (op.value.is_empty())
				return items_.empty() ? record({SlotRecord::Kind::None, {}}) : false;
			if (items_.empty() || items_.back() != op.value)
				return false;
			if (op.method == Method::Peek)
				return record({SlotRecord::Kind::None, {}});
			items_.pop_back();
			return record({SlotRecord::Kind::Removed, op.value});
		}
		default:
			return false;
		}
	}

	std::string fingerprint() const override
	{
		return join_values(items_.begin(), items_.end(), [](const Value &v) { return v.to_string(); });
	}

private:
	void revert(const SlotRecord &r) override
	{
		if (r.kind == SlotRecord::Kind::Added)
			items_.pop_back();
		else if (r.kind == SlotRecord::Kind::Removed)
			items_.push_back(r.value);
	}

	bool sized_;
	std::vector<Value> items_;
};

class QueueObject final : public Journaled<SlotRecord> {
public:
	AdtKind kind() const override { return AdtKind::Queue; }

	bool apply(const AbstractOperation &op) override
	{
		switch (op.method) {
		case Method::Enq:
			if (op.value.is_empty())
				return false;
			items_.push_back(op.value);
			return record({SlotRecord::Kind::Added, op.value});
		case Method::Deq:
		case Method::Peek:
			if (op.value.is_empty())
				return items_.empty() ? record({SlotRecord::Kind::None, {}}) : false;
			if (items_.empty() || items_.front() != op.value)
				return false;
			if (op.method == Method::Peek)
				return record({SlotRecord::Kind::None, {}});
			items_.pop_front();
			return record({SlotRecord::Kind::Removed, op.value});
		default:
			return false;
		}
	}

	std::string fingerprint() const override
	{
		return join_values(items_.begin(), items_.end(), [](const Value &v) { return v.to_string(); });
	}

private:
	void revert(const SlotRecord &r) override
	{
		if (r.kind == SlotRecord::Kind::Added)
			items_.pop_back();
		else if (r.kind == SlotRecord::Kind::Removed)
			items_.push_front(r.value);
	}

	std::deque<Value> items_;
};

} // namespace

std::unique_ptr<SimulatedObject> new_object(AdtKind kind)
{
	switch (kind) {
	case AdtKind::Stack:
		return std::make_unique<StackObject>(false);
	case AdtKind::SizedStack:
		return std::make_unique<StackObject>(true);
	case AdtKind::Queue:
		return std::make_unique<QueueObject>();
	case AdtKind::PriorityQueue:
		return std::make_unique<PriorityQueueObject>(false);
	case AdtKind::Depq:
		return std::make_unique<PriorityQueueObject>(true);
	case AdtKind::Set:
		return std::make_unique<SetObject>(false);
	case AdtKind::Multiset:
		return std::make_unique<SetObject>(true);
	case AdtKind::Counter:
		return std::make_unique<Counter>();
	case AdtKind::RmwRegister:
		return std::make_unique<RmwRegister>();
	}
	throw std::invalid_argument("unknown ADT kind");
}

bool sequence_member(AdtKind kind, std::span<const AbstractOperation> sequence)
{
	auto object = new_object(kind);
	for (const auto &op : sequence)
		if (!object->apply(op))
			return false;
	return true;
}

} // namespace linmon
