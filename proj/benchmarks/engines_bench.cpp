#include <benchmark/benchmark.h>

#include "linmon/checker_aadt.hpp"
#include "linmon/checker_queue.hpp"
#include "linmon/checker_stack.hpp"
#include "linmon/frontier.hpp"
#include "linmon/generator.hpp"

namespace {

void frontier_build(benchmark::State &state)
{
	const auto h = linmon::gen_history(linmon::AdtKind::PriorityQueue, static_cast<std::size_t>(state.range(0)),
	                                   static_cast<std::size_t>(state.range(1)), 11);
	for (auto _ : state)
		benchmark::DoNotOptimize(linmon::FrontierGraph::build(h));
	state.SetComplexityN(state.range(0));
}
BENCHMARK(frontier_build)->ArgsProduct({{250, 1000, 4000}, {2, 4, 8}})->Unit(benchmark::kMillisecond);

void aadt_priority_queue(benchmark::State &state)
{
	const auto h = linmon::gen_history(linmon::AdtKind::PriorityQueue, static_cast<std::size_t>(state.range(0)),
	                                   static_cast<std::size_t>(state.range(1)), 1);
	for (auto _ : state)
		benchmark::DoNotOptimize(linmon::check_aadt(h));
	state.SetComplexityN(state.range(0));
}
BENCHMARK(aadt_priority_queue)->ArgsProduct({{1000, 4000, 10000}, {2, 8}})->Unit(benchmark::kMillisecond);

void queue_engine(benchmark::State &state)
{
	const auto h = linmon::gen_history(linmon::AdtKind::Queue, static_cast<std::size_t>(state.range(0)), 3, 2);
	linmon::QueueOptions options;
	options.want_witness = state.range(1) != 0;
	for (auto _ : state)
		benchmark::DoNotOptimize(linmon::queue_check(h, options));
}
BENCHMARK(queue_engine)->ArgsProduct({{500, 2000, 5000}, {0, 1}})->Unit(benchmark::kMillisecond);

void stack_engine(benchmark::State &state)
{
	const auto h = linmon::gen_history(linmon::AdtKind::Stack, static_cast<std::size_t>(state.range(0)), 2, 3);
	for (auto _ : state)
		benchmark::DoNotOptimize(linmon::stack_check(h));
}
BENCHMARK(stack_engine)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
