#pragma once

#include <iosfwd>

namespace momo::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kMismatch = 3 };

// Entry point of the momo tool with injectable streams.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace momo::cli
