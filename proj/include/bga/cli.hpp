#pragma once

namespace bga {

// Entry point behind the command-line binary; returns the process exit code
// (0 success, 2 usage error, 1 runtime failure).
int cli_main(int argc, const char* const* argv);

}  // namespace bga
