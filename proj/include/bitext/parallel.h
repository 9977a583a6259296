// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BITEXT_PARALLEL_H
#define BITEXT_PARALLEL_H

#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace bitext {

/// Runs fn(i) for i in [0, n) on up to `jobs` workers (0 = hardware
/// concurrency).  Work is striped by index; fn must write results into
/// index-addressed slots so the outcome is order-independent.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  if (jobs == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  if (static_cast<std::size_t>(jobs) > n) jobs = static_cast<unsigned>(n);
  std::vector<std::future<void>> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&fn, w, n, jobs] {
      for (std::size_t i = w; i < n; i += jobs) fn(i);
    }));
  }
  for (auto& worker : workers) worker.get();  // propagates the first exception
}

}  // namespace bitext

#endif  // BITEXT_PARALLEL_H
