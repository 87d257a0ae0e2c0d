#include "hassecount/parallel.hpp"

#include <omp.h>

namespace hassecount {

namespace {
int default_workers = omp_get_max_threads();
}

void set_worker_count(int n) {
  omp_set_num_threads(n > 0 ? n : default_workers);
}

int worker_count() { return omp_get_max_threads(); }

}  // namespace hassecount
