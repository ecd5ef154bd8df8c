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

#ifndef KPE_SRC_EXTRACT_INTERNAL_HPP_
#define KPE_SRC_EXTRACT_INTERNAL_HPP_

#include <vector>

#include "kpe/extract.hpp"

namespace kpe::internal {

// Throws kEmptyDocument for blank text.
void require_text(const Document& doc);

// Collapses occurrences by normalized form in first-occurrence order. When
// `counts` is given it receives the occurrence count of each result.
std::vector<Candidate> merge_occurrences(
    const std::vector<CandidateOccurrence>& occurrences,
    std::vector<std::size_t>* counts);

}  // namespace kpe::internal

#endif  // KPE_SRC_EXTRACT_INTERNAL_HPP_
