#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace lorentzlab {

// Resolved run parameters; every report embeds one so a run is reproducible
// from the report alone.  Defaults: K=64, Q=2048, tol=1e-8, seed=0.
struct RunConfig {
  int K = 64;
  int Q = 2048;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = all hardware threads (after the env cap)
};

// Worker count for parallel loops: min(requested or hardware, LORENTZLAB_THREADS).
int effective_threads(int requested = 0);

// Runs fn(i) for i in [0, n) across workers.  Work items are independent and
// each item's internal summation order is fixed, so results do not depend on
// the worker count.
void parallel_for(int n, const std::function<void(int)>& fn, int requested_threads = 0);

}  // namespace lorentzlab
