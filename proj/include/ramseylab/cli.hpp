#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramseylab {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 decided/constructed, 2 NOT-FOUND / NONE verdicts,
// 3 UNDECIDED (caps), 64 usage error.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

// Drops the volatile "# generated-at:" provenance line; everything else is
// byte-deterministic for fixed argv and inputs.
std::string strip_volatile_lines(const std::string& text);

}  // namespace ramseylab
