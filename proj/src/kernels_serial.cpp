#include "antisym/kernels.hpp"

namespace antisym::kernels {

void run_serial(std::size_t count, const PairTask& task, VerificationReport& out) {
  VerificationReport partial;
  for (std::size_t index = 0; index < count; ++index) task(index, partial);
  out.merge(partial);
  out.sort_by_index();
}

void run(Execution mode, std::size_t count, const PairTask& task, VerificationReport& out) {
  if (mode == Execution::Serial) {
    run_serial(count, task, out);
  } else {
    run_parallel(count, task, out);
  }
}

}  // namespace antisym::kernels
