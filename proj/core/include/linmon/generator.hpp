#pragma once

#include "linmon/history.hpp"

#include <cstdint>
#include <string>

namespace linmon {

struct GenOptions {
	/// Concrete values are drawn from 1..value_range; 0 picks max(2, n/2).
	std::int64_t value_range = 0;
	/// Probability of attempting an operation that fails or observes emptiness.
	double failure_rate = 0.15;
	/// Widening attempts per operation.
	int widen_attempts = 6;
};

/// Deterministic in seed. Runs a legal sequential execution, gives each operation a point
/// time in order, then widens intervals at random while concurrency_width stays <= k_target.
/// The generating order is always a legal linearization.
/// Throws std::invalid_argument when k_target is 0 or exceeds n (for n > 0).
[[nodiscard]] History gen_history(AdtKind kind, std::size_t n, std::size_t k_target, std::uint64_t seed,
                                  GenOptions options = {});

struct Mutation {
	History history;
	std::string description;
};

/// One random perturbation: swap two values, flip a method, retarget a value, or shrink an
/// interval. The result validates but may or may not be linearizable.
/// Throws std::invalid_argument on an empty history.
[[nodiscard]] Mutation mutate_history(const History &h, std::uint64_t seed);

} // namespace linmon
