#ifndef MORAVA_CLI_HPP
#define MORAVA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace morava::cli {

inline constexpr const char* tool_name = "moravak";
inline constexpr const char* tool_version = "0.1.0";

// Exit codes: 0 success/verified, 1 verification mismatch (report still
// written), 2 input error, 3 budget or size limit exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace morava::cli

#endif
