#include "absurf/parallel.hpp"

#include <cstdlib>
#include <string>

namespace absurf {

unsigned default_jobs() {
  if (const char* env = std::getenv("ABSURF_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return unsigned(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace absurf
