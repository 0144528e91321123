#pragma once

namespace labelcor {

/// Environment variable consulted when no explicit thread count is given.
inline constexpr const char* kThreadsEnvVar = "LABELCOR_THREADS";

/// Worker count for OpenMP regions: `requested` if positive, else the value of
/// LABELCOR_THREADS if set and positive, else the OpenMP default.
int resolve_threads(int requested);

}  // namespace labelcor
