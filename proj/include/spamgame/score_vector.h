// Copyright 2026 The spamgame Authors.
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

#ifndef SPAMGAME_SCORE_VECTOR_H_
#define SPAMGAME_SCORE_VECTOR_H_

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "spamgame/review_graph.h"

namespace spamgame {

// Per-review suspiciousness over the live reviews of one graph snapshot,
// ids ascending.
struct ScoreVector {
  std::vector<ReviewId> ids;
  std::vector<double> values;

  std::size_t size() const { return ids.size(); }

  double at(ReviewId id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) {
      throw std::out_of_range("review not scored");
    }
    return values[static_cast<std::size_t>(it - ids.begin())];
  }
};

}  // namespace spamgame

#endif  // SPAMGAME_SCORE_VECTOR_H_
