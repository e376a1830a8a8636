#pragma once

#include "linmon/frontier.hpp"
#include "linmon/history.hpp"
#include "linmon/verdict.hpp"

#include <functional>
#include <span>
#include <stdexcept>

namespace linmon {

/// Brute-force ground truth. Enumerates interval-consistent total orders directly from the
/// intervals and never touches the frontier graph or any checking engine.
struct OracleOptions {
	std::size_t max_operations = 10;
};

class OracleCapExceeded : public std::length_error {
public:
	using std::length_error::length_error;
};

/// Calls visit on every interval-consistent order; visit returns false to stop early.
/// Returns the number of orders visited.
std::size_t enumerate_linearizations(const History &h,
                                     const std::function<bool(std::span<const OpIndex>)> &visit,
                                     OracleOptions options = {});

/// Linearizable iff some enumerated order is legal for h.kind; carries the first legal order
/// found as a witness. Illegal prefixes are abandoned as soon as the simulated object rejects them.
[[nodiscard]] Verdict oracle_check(const History &h, OracleOptions options = {});

} // namespace linmon
