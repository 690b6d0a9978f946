#pragma once

namespace trop::cli {

/// Command-line front end. Exit codes: 0 solved / check passed, 1 usage or
/// input error, 2 no regular solution / check failed / pipeline mismatch.
int run(int argc, const char* const* argv);

}  // namespace trop::cli
