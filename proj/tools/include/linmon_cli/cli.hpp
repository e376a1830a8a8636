#pragma once

#include "linmon/history.hpp"
#include "linmon/verdict.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace linmon::cli {

enum ExitCode : int { kLinearizable = 0, kNotLinearizable = 1, kInputError = 2 };

/// Engine names accepted by --engine: aadt, stack, queue, oracle.
[[nodiscard]] std::string_view default_engine(AdtKind kind);

/// Throws std::invalid_argument when the engine cannot check histories of this kind.
[[nodiscard]] Verdict run_engine(std::string_view engine, const History &h, bool want_witness);

/// Entry point shared by the executable and the tests.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace linmon::cli
