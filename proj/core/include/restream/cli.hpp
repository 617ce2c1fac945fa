#pragma once

#include <string>
#include <vector>

namespace restream {

// Entry point behind the restream binary: subcommands bench, run, gen.
// `args` excludes the program name. Exit code 0 on success, 1 on usage
// errors, 2 on I/O or parse errors.
int run_cli(const std::vector<std::string>& args);

}  // namespace restream
