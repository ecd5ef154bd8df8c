// Copyright 2026 The KPE Authors.
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

#ifndef KPE_INTERNAL_MMR_INL_
#define KPE_INTERNAL_MMR_INL_

#include <algorithm>
#include <limits>

namespace kpe {

template <typename Pairwise>
std::vector<std::size_t> mmr_select(std::span<const double> relevance,
                                    std::size_t k, double diversity,
                                    Pairwise&& pairwise) {
  const std::size_t n = relevance.size();
  std::vector<std::size_t> selected;
  std::vector<bool> taken(n, false);
  // Running max similarity of each candidate to the selected set.
  std::vector<double> redundancy(n, 0.0);
  const std::size_t limit = std::min(k, n);
  while (selected.size() < limit) {
    std::size_t best = n;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      const double value = diversity == 0.0
                               ? relevance[i]
                               : (1.0 - diversity) * relevance[i] -
                                     diversity * redundancy[i];
      if (value > best_value) {
        best_value = value;
        best = i;
      }
    }
    taken[best] = true;
    selected.push_back(best);
    if (diversity != 0.0) {
      for (std::size_t i = 0; i < n; ++i) {
        if (taken[i]) continue;
        const double sim = pairwise(i, best);
        redundancy[i] = selected.size() == 1 ? sim : std::max(redundancy[i], sim);
      }
    }
  }
  return selected;
}

}  // namespace kpe

#endif  // KPE_INTERNAL_MMR_INL_
