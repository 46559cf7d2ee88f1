#pragma once

namespace orthospec {

// Entry point for the command-line driver. Returns the process exit code:
// 0 when every requested verification converged (or the command succeeded),
// 1 when a verification failed to converge or a cross-validation mismatched,
// 2 on usage, parameter, or configuration errors.
int run_cli(int argc, const char* const* argv);

}  // namespace orthospec
