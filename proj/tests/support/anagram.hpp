#pragma once

#include "linmon/adt_models.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace linmon::testing {

using Sequence = std::vector<AbstractOperation>;

/// A legal sequence of about n operations, taken from a width-1 generated history.
Sequence legal_sequence(AdtKind kind, std::size_t n, std::uint64_t seed);

/// A random legal reordering of seq, found by randomized backtracking. nullopt when the
/// step budget runs out.
std::optional<Sequence> legal_permutation(AdtKind kind, const Sequence &seq, std::mt19937_64 &rng);

/// Short random operation sequence with values in the range seen in seq.
Sequence probe_suffix(AdtKind kind, const Sequence &seq, std::mt19937_64 &rng);

Sequence concat(const Sequence &a, const Sequence &b);

std::string fingerprint_of(AdtKind kind, const Sequence &seq);

struct AnagramReport {
	std::size_t pairs = 0;              // distinct legal permutations compared
	std::size_t fingerprint_mismatches = 0;
	std::size_t probe_mismatches = 0;
};

/// Compares legal sequences against legal permutations with probe suffixes appended.
AnagramReport anagram_suite(AdtKind kind, std::size_t min_pairs, std::size_t probes, std::uint64_t seed);

} // namespace linmon::testing
