#include "neighborly/parallel.hpp"

#include <cstdlib>
#include <string>

namespace neighborly {

int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  int fallback = hw == 0 ? 1 : static_cast<int>(hw);
  const char* env = std::getenv("NEIGHBORLY_THREADS");
  if (!env || !*env) return fallback;
  try {
    int n = std::stoi(env);
    if (n >= 1) return n;
  } catch (...) {
  }
  return fallback;
}

}  // namespace neighborly
