#include "ghznl/threads.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace ghznl {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  const char* env = std::getenv("NONLOC_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  try {
    int n = std::stoi(env);
    if (n >= 1) return n;
  } catch (...) {
  }
  return hw;
}

}  // namespace ghznl
