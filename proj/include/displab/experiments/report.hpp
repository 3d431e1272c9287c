#pragma once
// Offline re-rendering of a finished run directory.

#include <filesystem>
#include <ostream>

namespace displab {

// Re-renders every plot named in the manifest from its stored CSV and prints
// a one-screen summary of the run to `out`.  Returns false when the
// directory holds no run at all (absent or empty), which callers treat as
// "nothing to report" rather than an error.  A directory with content but a
// missing or unreadable manifest throws std::runtime_error.
bool render_report(const std::filesystem::path& dir, std::ostream& out);

}  // namespace displab
