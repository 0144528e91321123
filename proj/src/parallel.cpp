#include "labelcor/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace labelcor {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv(kThreadsEnvVar)) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      // unparseable: fall through to the OpenMP default
    }
  }
  return omp_get_max_threads();
}

}  // namespace labelcor
