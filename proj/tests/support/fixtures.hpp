#pragma once

#include "linmon/history.hpp"
#include "linmon/verdict.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linmon::testing {

Operation op(std::string id, Method method, std::optional<std::int64_t> value, TimeStamp inv, TimeStamp res,
             std::optional<Aux> aux = std::nullopt);

History make(AdtKind kind, std::vector<Operation> ops);

/// enq(3) on [1,3] and deq(3) on [2,4].
History h_queue();
/// Sequential enq(1), deq(2), enq(2).
History crossed_queue();
/// Three overlapping enqueues of 1, 2, 3 followed by deq(3).
History three_enq_pqueue();
/// push(1) on [1,4] and pop(1) on [2,3].
History nested_stack();

struct Labelled {
	History history;
	bool linearizable;
};

/// Generated and mutated histories alternately, labelled by the brute-force oracle.
/// n is drawn from 1..max_n and k from 1..min(max_k, n).
std::vector<Labelled> labelled_suite(AdtKind kind, std::size_t count, std::size_t max_n, std::size_t max_k,
                                     std::uint64_t seed);

/// The engine responsible for the kind: AADT search, stack recognizer or queue DP.
Verdict engine_check(const History &h, bool want_witness = true);

/// Every subset of ops passing the raw interval test, as sorted index lists.
std::vector<std::vector<std::uint32_t>> brute_force_states(const History &h);

} // namespace linmon::testing
