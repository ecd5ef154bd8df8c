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

#ifndef KPE_SRC_TEXT_UTIL_HPP_
#define KPE_SRC_TEXT_UTIL_HPP_

#include <string_view>

namespace kpe {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

// Calls fn(line) for each '\n'-separated line, without the terminator and
// without a trailing '\r'. A final empty line after the last '\n' is not
// reported.
template <typename Fn>
void for_each_line(std::string_view contents, Fn&& fn) {
  while (!contents.empty()) {
    const auto nl = contents.find('\n');
    std::string_view line = contents.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line);
    if (nl == std::string_view::npos) break;
    contents.remove_prefix(nl + 1);
  }
}

}  // namespace kpe

#endif  // KPE_SRC_TEXT_UTIL_HPP_
