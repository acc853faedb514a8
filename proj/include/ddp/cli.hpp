#pragma once

namespace ddp {

// Entry point behind the `ddp` binary. Returns the process exit code:
// 0 all checks passed, 1 a mathematical check failed, 2 bad usage or input.
int run_cli(int argc, const char* const* argv);

}  // namespace ddp
