#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <stdexcept>
#include <string>

namespace coxdim {

/// Arbitrary-precision integer used for all exact arithmetic.
using Integer = boost::multiprecision::cpp_int;

/// User-supplied input violates a documented precondition (bad JSON,
/// composite p, unknown vertex, ...).  The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction step could not produce a valid object, e.g. a subdivision
/// tower that is still not simplicial or not flag after the requested number
/// of subdivisions.
class BuildError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Logging, controlled by the COXDIM_LOG environment variable
// (error|warn|info|debug).  Messages go to stderr so that JSON reports on
// stdout stay clean.
enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

LogLevel log_level();
void log_message(LogLevel level, const std::string& msg);

inline void log_info(const std::string& msg) { log_message(LogLevel::Info, msg); }
inline void log_debug(const std::string& msg) { log_message(LogLevel::Debug, msg); }
inline void log_warn(const std::string& msg) { log_message(LogLevel::Warn, msg); }

/// Global cap on worker threads (the CLI's --threads).  0 never occurs;
/// the default is the hardware concurrency.
unsigned thread_budget();
void set_thread_budget(unsigned n);

/// Runs body(0..n-1) across at most thread_budget() threads.  The body must
/// only write to its own slot of any shared output, which makes the result
/// independent of the thread count.  Exceptions are rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace coxdim
