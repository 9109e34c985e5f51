// Copyright 2026 The pathcell Authors
//
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

#include <chrono>

#include "pathcell/corpus.hpp"
#include "pathcell/error.hpp"
#include "pathcell/minimal.hpp"

namespace pathcell {

BenchReport bench_quadratic(const std::string& family, const std::vector<std::size_t>& sizes, std::size_t k,
                            double min_seconds) {
  Digraph (*make)(std::size_t) = nullptr;
  if (family == "dipath") {
    make = directed_path;
  } else if (family == "dicycle-chain") {
    make = dicycle_chain;
  } else {
    throw invalid_argument("unknown bench family '" + family + "' (expected dipath or dicycle-chain)");
  }
  using clock = std::chrono::steady_clock;
  BenchReport r;
  r.family = family;
  r.degree = k;
  r.sizes = sizes;
  std::vector<double> xs;
  for (std::size_t n : sizes) {
    const Digraph g = make(n);
    double best = 0;
    for (int trial = 0; trial < 3; ++trial) {
      std::size_t reps = 0;
      const auto start = clock::now();
      double elapsed = 0;
      do {
        const MinimalBasis b = minimal_basis(g, k);
        ++reps;
        elapsed = std::chrono::duration<double>(clock::now() - start).count();
      } while (elapsed < min_seconds);
      const double per = elapsed / static_cast<double>(reps);
      if (trial == 0 || per < best) best = per;
    }
    r.seconds.push_back(best);
    xs.push_back(static_cast<double>(n));
  }
  r.slope = log_log_slope(xs, r.seconds);
  return r;
}

}  // namespace pathcell
