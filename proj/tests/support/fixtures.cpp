#include "fixtures.hpp"

#include "linmon/checker_aadt.hpp"
#include "linmon/checker_queue.hpp"
#include "linmon/checker_stack.hpp"
#include "linmon/generator.hpp"
#include "linmon/oracle.hpp"

#include <algorithm>

namespace linmon::testing {

Operation op(std::string id, Method method, std::optional<std::int64_t> value, TimeStamp inv, TimeStamp res,
             std::optional<Aux> aux)
{
	Operation o;
	o.id = std::move(id);
	o.method = method;
	o.value = value ? Value::concrete(*value) : Value::empty();
	o.aux = aux;
	o.inv = inv;
	o.res = res;
	return o;
}

History make(AdtKind kind, std::vector<Operation> ops)
{
	return History{kind, std::move(ops)};
}

History h_queue()
{
	return make(AdtKind::Queue, {op("o1", Method::Enq, 3, 1, 3), op("o2", Method::Deq, 3, 2, 4)});
}

History crossed_queue()
{
	return make(AdtKind::Queue, {op("a", Method::Enq, 1, 1, 2), op("b", Method::Deq, 2, 3, 4),
	                             op("c", Method::Enq, 2, 5, 6)});
}

History three_enq_pqueue()
{
	return make(AdtKind::PriorityQueue, {op("e1", Method::Enq, 1, 1, 4), op("e2", Method::Enq, 2, 2, 5),
	                                     op("e3", Method::Enq, 3, 3, 6), op("d3", Method::Deq, 3, 7, 8)});
}

History nested_stack()
{
	return make(AdtKind::Stack, {op("push1", Method::Push, 1, 1, 4), op("pop1", Method::Pop, 1, 2, 3)});
}

std::vector<Labelled> labelled_suite(AdtKind kind, std::size_t count, std::size_t max_n, std::size_t max_k,
                                     std::uint64_t seed)
{
	std::vector<Labelled> out;
	out.reserve(count);
	for (std::uint64_t i = 0; i < count; ++i) {
		const auto s = seed * 1000003 + i;
		const std::size_t n = 1 + s % max_n;
		const std::size_t k = 1 + (s / max_n) % std::min(max_k, n);
		GenOptions options;
		options.value_range = static_cast<std::int64_t>(1 + (s / 7) % 3);
		auto h = gen_history(kind, n, k, s, options);
		if (i % 2 == 1)
			h = mutate_history(h, s).history;
		const bool label = oracle_check(h).linearizable;
		out.push_back({std::move(h), label});
	}
	return out;
}

Verdict engine_check(const History &h, bool want_witness)
{
	switch (h.kind) {
	case AdtKind::Stack:
		return stack_check(h, {.want_witness = want_witness});
	case AdtKind::Queue:
		return queue_check(h, {.want_witness = want_witness});
	default:
		return check_aadt(h, {.memoize = true, .want_witness = want_witness});
	}
}

std::vector<std::vector<std::uint32_t>> brute_force_states(const History &h)
{
	std::vector<std::vector<std::uint32_t>> out;
	const auto n = h.ops.size();
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
		bool ok = true;
		for (std::size_t a = 0; a < n && ok; ++a)
			for (std::size_t b = 0; b < n && ok; ++b)
				if ((mask >> a & 1) && !(mask >> b & 1) && !(h.ops[a].inv < h.ops[b].res))
					ok = false;
		if (!ok)
			continue;
		std::vector<std::uint32_t> members;
		for (std::uint32_t i = 0; i < n; ++i)
			if (mask >> i & 1)
				members.push_back(i);
		out.push_back(std::move(members));
	}
	std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
		return a.size() != b.size() ? a.size() < b.size() : a < b;
	});
	return out;
}

} // namespace linmon::testing
