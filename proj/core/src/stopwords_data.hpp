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

#ifndef KPE_SRC_STOPWORDS_DATA_HPP_
#define KPE_SRC_STOPWORDS_DATA_HPP_

#include <string_view>

namespace kpe::internal {

// Contents of data/stopwords/*.txt, embedded at configure time.
extern const std::string_view kStopwordsRu;
extern const std::string_view kStopwordsEn;

}  // namespace kpe::internal

#endif  // KPE_SRC_STOPWORDS_DATA_HPP_
