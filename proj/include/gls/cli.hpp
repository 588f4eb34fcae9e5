#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace gls {

/// Exit codes: 0 success, 1 failure (verification or evaluation), 2 usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Flat key=value text: one pair per line, '#' starts a comment line, blank
/// lines ignored.  Throws std::runtime_error naming the offending line.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Worker count for sweeps: GLS_THREADS if set (a positive integer),
/// otherwise the hardware concurrency.  Throws std::invalid_argument for a
/// malformed value.
unsigned worker_threads_from_env();

}  // namespace gls
