#include "anagram.hpp"
#include "fixtures.hpp"

#include "linmon/adt_models.hpp"

#include <gtest/gtest.h>

#include <random>

namespace linmon {
namespace {

using testing::Sequence;

AbstractOperation a(Method m, std::optional<std::int64_t> v = std::nullopt, std::optional<Aux> aux = std::nullopt)
{
	return {m, v ? Value::concrete(*v) : Value::empty(), aux};
}

TEST(NewObject, InitialFingerprints)
{
	EXPECT_EQ(new_object(AdtKind::Counter)->fingerprint(), "0");
	EXPECT_EQ(new_object(AdtKind::PriorityQueue)->fingerprint(), "[]");
	EXPECT_EQ(new_object(AdtKind::RmwRegister)->fingerprint(), "0");
	for (auto kind : all_kinds())
		EXPECT_EQ(new_object(kind)->kind(), kind);
}

TEST(Apply, MaxPriorityQueueDequeuesTheMaximum)
{
	auto pq = new_object(AdtKind::PriorityQueue);
	for (std::int64_t v : {1, 2, 3})
		ASSERT_TRUE(pq->apply(a(Method::Enq, v)));
	EXPECT_TRUE(pq->apply(a(Method::Deq, 3)));
	EXPECT_EQ(pq->fingerprint(), "[1,2]");
}

TEST(Apply, PriorityQueueRejectsNonMaximum)
{
	auto pq = new_object(AdtKind::PriorityQueue);
	ASSERT_TRUE(pq->apply(a(Method::Enq, 1)));
	ASSERT_TRUE(pq->apply(a(Method::Enq, 2)));
	EXPECT_FALSE(pq->apply(a(Method::Deq, 1)));
	EXPECT_EQ(pq->fingerprint(), "[1,2]");
}

TEST(Apply, DoubleEndedQueueServesBothSides)
{
	auto q = new_object(AdtKind::Depq);
	for (std::int64_t v : {4, 1, 7})
		ASSERT_TRUE(q->apply(a(Method::Enq, v)));
	EXPECT_TRUE(q->apply(a(Method::PeekMin, 1)));
	EXPECT_TRUE(q->apply(a(Method::DeqMin, 1)));
	EXPECT_TRUE(q->apply(a(Method::Deq, 7)));
	EXPECT_EQ(q->fingerprint(), "[4]");
	EXPECT_FALSE(new_object(AdtKind::PriorityQueue)->apply(a(Method::DeqMin)));
}

TEST(Apply, QueueRejectsTau2Dequeue)
{
	auto q = new_object(AdtKind::Queue);
	ASSERT_TRUE(q->apply(a(Method::Enq, 1)));
	EXPECT_FALSE(q->apply(a(Method::Deq, 2)));
}

TEST(Apply, FailedRemovalsOnlyOnEmptyObjects)
{
	for (auto kind : {AdtKind::Stack, AdtKind::Queue, AdtKind::PriorityQueue}) {
		auto obj = new_object(kind);
		const auto remove = kind == AdtKind::Stack ? Method::Pop : Method::Deq;
		const auto insert = kind == AdtKind::Stack ? Method::Push : Method::Enq;
		EXPECT_TRUE(obj->apply(a(remove)));
		EXPECT_TRUE(obj->apply(a(Method::Peek)));
		ASSERT_TRUE(obj->apply(a(insert, 5)));
		EXPECT_FALSE(obj->apply(a(remove)));
		EXPECT_FALSE(obj->apply(a(Method::Peek)));
	}
}

TEST(Apply, SetFlagsMustMatchMembership)
{
	auto set = new_object(AdtKind::Set);
	EXPECT_FALSE(set->apply(a(Method::Add, 1, false)));
	EXPECT_TRUE(set->apply(a(Method::Add, 1, true)));
	EXPECT_TRUE(set->apply(a(Method::Add, 1, false)));
	EXPECT_FALSE(set->apply(a(Method::Add, 1)));
	EXPECT_TRUE(set->apply(a(Method::Contains, 1, true)));
	EXPECT_FALSE(set->apply(a(Method::Contains, 1, false)));
	EXPECT_FALSE(set->apply(a(Method::Contains, 1)));
	EXPECT_TRUE(set->apply(a(Method::Remove, 1, true)));
	EXPECT_TRUE(set->apply(a(Method::Remove, 1, false)));
	EXPECT_EQ(set->fingerprint(), "[]");
}

TEST(Apply, MultisetAddsNeverFail)
{
	auto bag = new_object(AdtKind::Multiset);
	EXPECT_TRUE(bag->apply(a(Method::Add, 2)));
	EXPECT_TRUE(bag->apply(a(Method::Add, 2)));
	EXPECT_FALSE(bag->apply(a(Method::Add, 2, false)));
	EXPECT_EQ(bag->fingerprint(), "[2,2]");
}

TEST(Apply, RegisterReadModifyWrite)
{
	auto reg = new_object(AdtKind::RmwRegister);
	EXPECT_FALSE(reg->apply(a(Method::Rmw, 5, std::int64_t{1})));
	EXPECT_TRUE(reg->apply(a(Method::Rmw, 1, std::int64_t{0})));
	EXPECT_TRUE(reg->apply(a(Method::Rmw, 5, std::int64_t{1})));
	EXPECT_EQ(reg->fingerprint(), "5");
}

TEST(Apply, SizedStackChecksReportedSize)
{
	auto s = new_object(AdtKind::SizedStack);
	EXPECT_FALSE(s->apply(a(Method::Push, 4, std::int64_t{2})));
	EXPECT_TRUE(s->apply(a(Method::Push, 4, std::int64_t{1})));
	EXPECT_TRUE(s->apply(a(Method::Push, 6, std::int64_t{2})));
	EXPECT_FALSE(s->apply(a(Method::Pop, 6, std::int64_t{1})));
	EXPECT_TRUE(s->apply(a(Method::Pop, 6, std::int64_t{2})));
}

TEST(Apply, CounterReadsObserveTheCount)
{
	auto c = new_object(AdtKind::Counter);
	EXPECT_TRUE(c->apply(a(Method::Inc)));
	EXPECT_TRUE(c->apply(a(Method::Inc)));
	EXPECT_TRUE(c->apply(a(Method::Dec)));
	EXPECT_FALSE(c->apply(a(Method::Read, 2)));
	EXPECT_TRUE(c->apply(a(Method::Read, 1)));
	EXPECT_EQ(c->fingerprint(), "1");
}

TEST(Undo, RestoresFingerprint)
{
	auto q = new_object(AdtKind::Queue);
	const auto initial = q->fingerprint();
	ASSERT_TRUE(q->apply(a(Method::Enq, 5)));
	q->undo();
	EXPECT_EQ(q->fingerprint(), initial);
	EXPECT_EQ(q->journal_size(), 0u);
}

TEST(Undo, FreshObjectThrows)
{
	for (auto kind : all_kinds())
		EXPECT_THROW(new_object(kind)->undo(), std::logic_error);
}

TEST(Undo, FailedApplyLeavesNothingToUndo)
{
	auto s = new_object(AdtKind::Stack);
	EXPECT_FALSE(s->apply(a(Method::Pop, 1)));
	EXPECT_EQ(s->journal_size(), 0u);
}

TEST(Undo, TenThousandRandomOperationsRoundTrip)
{
	for (auto kind : all_kinds()) {
		std::mt19937_64 rng(static_cast<std::uint64_t>(kind) + 17);
		auto obj = new_object(kind);
		// fingerprints keyed by journal depth, sampled to keep the test linear
		std::vector<std::pair<std::size_t, std::string>> checkpoints{{0, obj->fingerprint()}};
		auto pool = testing::legal_sequence(kind, 64, 5);
		std::size_t applied = 0;
		for (std::size_t step = 0; step < 10000; ++step) {
			Sequence probe = testing::probe_suffix(kind, pool, rng);
			probe.push_back(pool[step % pool.size()]);
			for (const auto &o : probe)
				if (obj->apply(o) && ++applied % 97 == 0)
					checkpoints.emplace_back(applied, obj->fingerprint());
		}
		ASSERT_EQ(obj->journal_size(), applied);
		while (obj->journal_size() > 0) {
			if (checkpoints.back().first == obj->journal_size()) {
				ASSERT_EQ(obj->fingerprint(), checkpoints.back().second);
				checkpoints.pop_back();
			}
			obj->undo();
		}
		EXPECT_EQ(obj->fingerprint(), checkpoints.front().second);
		EXPECT_EQ(obj->fingerprint(), new_object(kind)->fingerprint());
	}
}

TEST(SequenceMember, QueueTau1AndTau2)
{
	Sequence tau1{a(Method::Enq, 1), a(Method::Enq, 2), a(Method::Deq, 1), a(Method::Deq, 2)};
	Sequence crossed{a(Method::Enq, 1), a(Method::Deq, 2), a(Method::Enq, 2)};
	EXPECT_TRUE(sequence_member(AdtKind::Queue, tau1));
	EXPECT_FALSE(sequence_member(AdtKind::Queue, crossed));
}

TEST(SequenceMember, EmptySequenceIsMember)
{
	for (auto kind : all_kinds())
		EXPECT_TRUE(sequence_member(kind, {}));
}

TEST(Fingerprint, ThreeEnqueuesThenDequeueLeaveOneAndTwo)
{
	Sequence tau{a(Method::Enq, 1), a(Method::Enq, 2), a(Method::Enq, 3), a(Method::Deq, 3)};
	EXPECT_EQ(testing::fingerprint_of(AdtKind::PriorityQueue, tau), "[1,2]");
	Sequence other{a(Method::Enq, 3), a(Method::Enq, 1), a(Method::Deq, 3), a(Method::Enq, 2)};
	EXPECT_EQ(testing::fingerprint_of(AdtKind::PriorityQueue, other), "[1,2]");
}

TEST(AnagramAgnosticism, HoldsForEveryAgnosticKind)
{
	std::size_t kinds = 0;
	for (auto kind : all_kinds()) {
		if (!is_anagram_agnostic(kind))
			continue;
		++kinds;
		auto report = testing::anagram_suite(kind, 200, 50, 1000 + static_cast<std::uint64_t>(kind));
		EXPECT_GE(report.pairs, 200u) << to_string(kind);
		EXPECT_EQ(report.fingerprint_mismatches, 0u) << to_string(kind);
		EXPECT_EQ(report.probe_mismatches, 0u) << to_string(kind);
	}
	EXPECT_EQ(kinds, 7u);
}

TEST(AnagramAgnosticism, StackCounterexample)
{
	EXPECT_FALSE(is_anagram_agnostic(AdtKind::Stack));
	Sequence x{a(Method::Push, 1), a(Method::Push, 2)};
	Sequence y{a(Method::Push, 2), a(Method::Push, 1)};
	EXPECT_TRUE(sequence_member(AdtKind::Stack, x));
	EXPECT_TRUE(sequence_member(AdtKind::Stack, y));
	EXPECT_NE(testing::fingerprint_of(AdtKind::Stack, x), testing::fingerprint_of(AdtKind::Stack, y));
	Sequence probe{a(Method::Pop, 2)};
	EXPECT_NE(sequence_member(AdtKind::Stack, testing::concat(x, probe)),
	          sequence_member(AdtKind::Stack, testing::concat(y, probe)));
}

TEST(AnagramAgnosticism, QueueCounterexample)
{
	EXPECT_FALSE(is_anagram_agnostic(AdtKind::Queue));
	Sequence x{a(Method::Enq, 1), a(Method::Enq, 2)};
	Sequence y{a(Method::Enq, 2), a(Method::Enq, 1)};
	EXPECT_NE(testing::fingerprint_of(AdtKind::Queue, x), testing::fingerprint_of(AdtKind::Queue, y));
	Sequence probe{a(Method::Deq, 1)};
	EXPECT_NE(sequence_member(AdtKind::Queue, testing::concat(x, probe)),
	          sequence_member(AdtKind::Queue, testing::concat(y, probe)));
}

} // namespace
} // namespace linmon
