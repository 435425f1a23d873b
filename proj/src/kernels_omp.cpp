#include <omp.h>

#include <exception>
#include <vector>

#include "antisym/kernels.hpp"

namespace antisym::kernels {

int max_threads() { return omp_get_max_threads(); }

void run_parallel(std::size_t count, const PairTask& task, VerificationReport& out) {
  const int threads = omp_get_max_threads();
  std::vector<VerificationReport> partials(static_cast<std::size_t>(threads));
  std::exception_ptr failure;
  const auto n = static_cast<long long>(count);

#pragma omp parallel num_threads(threads)
  {
    VerificationReport& local = partials[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
    for (long long index = 0; index < n; ++index) {
      try {
        task(static_cast<std::size_t>(index), local);
      } catch (...) {
#pragma omp critical(antisym_kernel_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& partial : partials) out.merge(partial);
  out.sort_by_index();
}

}  // namespace antisym::kernels
