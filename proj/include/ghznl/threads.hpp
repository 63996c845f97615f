#pragma once

namespace ghznl {

// Number of worker threads parallel sections may use: hardware concurrency
// by default, capped by the NONLOC_THREADS environment variable (values
// below 1 or unparsable values fall back to 1).
int worker_count();

}  // namespace ghznl
