#pragma once

// Command implementations behind the `surfhom` executable. Each returns
// the exit code and the text destined for stdout / stderr so they can be
// driven in-process by tests.
//
// Exit codes: 0 success and every validation passes, 1 validation failure,
// 2 malformed input, 3 search aborted by the state cap.

#include <string>
#include <string_view>

#include "surfhom/fixed_class_search.hpp"
#include "surfhom/symplectic.hpp"

namespace surfhom {

enum class OutputFormat { json, table };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int validation = 1;
inline constexpr int malformed = 2;
inline constexpr int limit = 3;
} // namespace exit_code

struct CommandResult {
    int exit_code = exit_code::ok;
    std::string out;
    std::string err;
};

struct RenderOptions {
    OutputFormat format = OutputFormat::json;
    bool color = false; ///< ANSI colors in table output
};

CommandResult run_check(std::string_view problem_text);
CommandResult run_homology(std::string_view problem_text, const RenderOptions& render);
CommandResult run_search(std::string_view problem_text, const SearchOptions& search, const RenderOptions& render);
/// Trivial holonomy on F x base; compares the engine against Künneth.
CommandResult run_oracle(int fiber_genus, int base_genus, BaseType base, const RenderOptions& render);

} // namespace surfhom
