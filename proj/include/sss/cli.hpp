#pragma once

namespace sss {

// Entry point behind the `sss` binary, callable in-process by tests.
// Returns 0 on success, 1 on operational errors, 2 on usage errors.
int run_cli(int argc, const char* const* argv);

}  // namespace sss
