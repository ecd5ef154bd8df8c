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

#ifndef KPE_STOPWORDS_HPP_
#define KPE_STOPWORDS_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>

namespace kpe {

enum class Lang { kRu, kEn };

std::string_view lang_name(Lang lang);

// Stopword file format: UTF-8, one lowercase word per line, lines starting
// with '#' ignored. A "# version: <tag>" comment sets version().
class StopwordList {
 public:
  StopwordList() = default;

  static StopwordList parse(std::string_view contents);
  static StopwordList from_file(const std::filesystem::path& path);
  // The list compiled into the library.
  static const StopwordList& bundled(Lang lang);

  // Case-insensitive; "" is never a stopword.
  bool contains(std::string_view word) const;

  const std::string& version() const { return version_; }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
  std::string version_;
};

bool is_stopword(std::string_view word, Lang lang);

}  // namespace kpe

#endif  // KPE_STOPWORDS_HPP_
