#pragma once

#include <cstddef>
#include <functional>

#include "antisym/report.hpp"

namespace antisym::kernels {

/// Work for pair `index`, recorded into a partial report.
using PairTask = std::function<void(std::size_t index, VerificationReport& partial)>;

enum class Execution { Serial, Parallel };

/// Reference loop over [0, count).
void run_serial(std::size_t count, const PairTask& task, VerificationReport& out);

/// OpenMP loop over [0, count) with thread-local partial reports. The merged
/// report matches run_serial exactly once sorted by index.
void run_parallel(std::size_t count, const PairTask& task, VerificationReport& out);

void run(Execution mode, std::size_t count, const PairTask& task, VerificationReport& out);

int max_threads();

}  // namespace antisym::kernels
