#ifndef KACSPEC_CLI_HPP
#define KACSPEC_CLI_HPP

#include <string>
#include <vector>

namespace kacspec::cli {

/// Full command dispatch. Returns the process exit code: 0 on success,
/// 1 on domain errors (bad flags/parameters, degenerate inputs for
/// closed-form requests, unwritable sinks), 2 when an identity the library
/// asserts unconditionally fails.
int run(const std::vector<std::string>& args);

} // namespace kacspec::cli

#endif // KACSPEC_CLI_HPP
