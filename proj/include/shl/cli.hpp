#pragma once

namespace shl {

/// Full command-line front end; returns the process exit code
/// (pass 0, fail 1, error/usage 2, unsupported scope 3).
int run_cli(int argc, char** argv);

}  // namespace shl
