#ifndef MORAVA_COMMON_HPP
#define MORAVA_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace morava {

// Shared error taxonomy. Every module throws subclasses of Error so the CLI
// can map failures onto its exit codes (input error vs budget vs math).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// group_engine
struct InconsistentPresentation : Error { using Error::Error; };
struct UnsupportedRule : Error { using Error::Error; };
struct InvalidAction : Error { using Error::Error; };

// resource limits
struct SizeLimit : Error { using Error::Error; };
struct BudgetExceeded : Error {
    BudgetExceeded(const std::string& what, std::uint64_t attempted_count)
        : Error(what), attempted(attempted_count) {}
    std::uint64_t attempted;
};

// cp_modules
struct NotOrderP : Error { using Error::Error; };

// relation_dsl
struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t at)
        : Error(what + " (offset " + std::to_string(at) + ")"), offset(at) {}
    std::size_t offset;
};
struct UnknownName : Error { using Error::Error; };
struct NegativeExponent : Error { using Error::Error; };

// fp_poly
struct NoStabilization : Error { using Error::Error; };

// malformed files, JSON, command lines
struct InputError : Error { using Error::Error; };

// Logging to stderr, controlled by the LOG environment variable
// (error | info | debug). Reports go to stdout, logs never do.
enum class LogLevel { error = 0, info = 1, debug = 2 };
LogLevel log_level();
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

} // namespace morava

#endif
