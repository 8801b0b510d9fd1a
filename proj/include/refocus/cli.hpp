#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>

#include "refocus/semantics.hpp"

namespace refocus::cli {

// Process exit codes.
inline constexpr int kExitValue = 0;
inline constexpr int kExitStuck = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDisagree = 3;
inline constexpr int kExitFault = 4;

enum class TraceMode { Rb, Rf, Machine };

std::optional<TraceMode> trace_mode_from_name(std::string_view name) noexcept;

int cmd_eval(std::string_view expr, SemanticsChoice s, std::ostream& out, std::ostream& err);
int cmd_trace(std::string_view expr, TraceMode mode, std::ostream& out, std::ostream& err);
int cmd_compare(std::string_view expr, std::ostream& out, std::ostream& err);
int cmd_bench(std::span<const std::size_t> sizes, std::ostream& out, std::ostream& err);
int cmd_selftest(std::ostream& out);

}  // namespace refocus::cli
