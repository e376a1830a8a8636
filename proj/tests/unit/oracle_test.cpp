#include "fixtures.hpp"

#include "linmon/oracle.hpp"

#include <gtest/gtest.h>

#include <set>

namespace linmon {
namespace {

using testing::make;
using testing::op;

std::set<std::vector<OpIndex>> orders(const History &h)
{
	std::set<std::vector<OpIndex>> out;
	enumerate_linearizations(h, [&](std::span<const OpIndex> o) {
		out.emplace(o.begin(), o.end());
		return true;
	});
	return out;
}

TEST(Enumerate, QueueExampleHasBothOrders)
{
	std::set<std::vector<OpIndex>> expected{{0, 1}, {1, 0}};
	EXPECT_EQ(orders(testing::h_queue()), expected);
}

TEST(Enumerate, DisjointIntervalsHaveOneOrder)
{
	auto h = make(AdtKind::Counter, {op("a", Method::Inc, std::nullopt, 1, 2), op("b", Method::Inc, std::nullopt, 3, 4)});
	EXPECT_EQ(orders(h).size(), 1u);
}

TEST(Enumerate, EmptyHistoryHasTheEmptyOrder)
{
	auto all = orders(History{AdtKind::Queue, {}});
	ASSERT_EQ(all.size(), 1u);
	EXPECT_TRUE(all.begin()->empty());
}

TEST(Enumerate, VisitorCanStopEarly)
{
	auto h = testing::three_enq_pqueue();
	std::size_t seen = 0;
	auto visited = enumerate_linearizations(h, [&](std::span<const OpIndex>) { return ++seen < 2; });
	EXPECT_EQ(seen, 2u);
	EXPECT_EQ(visited, 2u);
}

TEST(Enumerate, CapIsEnforced)
{
	History h{AdtKind::Counter, {}};
	for (int i = 0; i < 11; ++i)
		h.ops.push_back(op("c" + std::to_string(i), Method::Inc, std::nullopt, 2 * i + 1, 2 * i + 2));
	EXPECT_THROW((void)oracle_check(h), OracleCapExceeded);
	EXPECT_TRUE(oracle_check(h, {.max_operations = 11}).linearizable);
}

TEST(OracleCheck, ReferenceExamples)
{
	EXPECT_TRUE(oracle_check(testing::three_enq_pqueue()).linearizable);
	EXPECT_FALSE(oracle_check(testing::crossed_queue()).linearizable);
	EXPECT_TRUE(oracle_check(testing::h_queue()).linearizable);
	EXPECT_TRUE(oracle_check(History{AdtKind::Stack, {}}).linearizable);
}

TEST(OracleCheck, WitnessIsValid)
{
	for (auto kind : all_kinds())
		for (const auto &[h, label] : testing::labelled_suite(kind, 40, 6, 3, 8)) {
			auto v = oracle_check(h);
			if (!label)
				continue;
			ASSERT_TRUE(v.witness);
			EXPECT_TRUE(witness_problems(h, *v.witness).empty());
		}
}

TEST(AssignTimestamps, RejectsOrdersAgainstRealTime)
{
	auto h = make(AdtKind::Counter, {op("a", Method::Inc, std::nullopt, 1, 2), op("b", Method::Inc, std::nullopt, 3, 4)});
	const std::vector<OpIndex> backwards{1, 0};
	EXPECT_FALSE(assign_timestamps(h, backwards).has_value());
	const std::vector<OpIndex> forwards{0, 1};
	auto w = assign_timestamps(h, forwards);
	ASSERT_TRUE(w);
	EXPECT_TRUE(witness_problems(h, *w).empty());
}

TEST(WitnessProblems, FlagsEachDefect)
{
	auto h = testing::h_queue();
	std::vector<WitnessEntry> good{{0, TimeStamp(5, 2)}, {1, TimeStamp(7, 2)}};
	EXPECT_TRUE(witness_problems(h, good).empty());
	std::vector<WitnessEntry> outside{{0, TimeStamp(3)}, {1, TimeStamp(7, 2)}};
	EXPECT_FALSE(witness_problems(h, outside).empty());
	std::vector<WitnessEntry> unordered{{0, TimeStamp(5, 2)}, {1, TimeStamp(5, 2)}};
	EXPECT_FALSE(witness_problems(h, unordered).empty());
	std::vector<WitnessEntry> illegal{{1, TimeStamp(5, 2)}, {0, TimeStamp(11, 4)}};
	EXPECT_FALSE(witness_problems(h, illegal).empty());
	std::vector<WitnessEntry> missing{{0, TimeStamp(5, 2)}};
	EXPECT_FALSE(witness_problems(h, missing).empty());
}

} // namespace
} // namespace linmon
