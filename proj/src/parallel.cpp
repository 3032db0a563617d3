#include "sperner/parallel.hpp"

#include <omp.h>

namespace sperner {

int worker_count() { return omp_get_max_threads(); }

}  // namespace sperner
