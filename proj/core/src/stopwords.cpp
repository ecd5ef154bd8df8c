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

#include "kpe/stopwords.hpp"

#include <fstream>
#include <sstream>

#include "kpe/error.hpp"
#include "kpe/unicode.hpp"
#include "stopwords_data.hpp"
#include "text_util.hpp"

namespace kpe {

std::string_view lang_name(Lang lang) {
  return lang == Lang::kRu ? "ru" : "en";
}

StopwordList StopwordList::parse(std::string_view contents) {
  StopwordList list;
  constexpr std::string_view kVersionTag = "version:";
  for_each_line(contents, [&](std::string_view raw) {
    const std::string_view line = trim(raw);
    if (line.empty()) return;
    if (line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      if (body.starts_with(kVersionTag)) {
        list.version_ = std::string(trim(body.substr(kVersionTag.size())));
      }
      return;
    }
    list.words_.insert(utf8::to_lower(line));
  });
  return list;
}

StopwordList StopwordList::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open stopword list " + path.string(),
                path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const StopwordList& StopwordList::bundled(Lang lang) {
  static const StopwordList ru = parse(internal::kStopwordsRu);
  static const StopwordList en = parse(internal::kStopwordsEn);
  return lang == Lang::kRu ? ru : en;
}

bool StopwordList::contains(std::string_view word) const {
  if (word.empty()) return false;
  return words_.contains(utf8::to_lower(word));
}

bool is_stopword(std::string_view word, Lang lang) {
  return StopwordList::bundled(lang).contains(word);
}

}  // namespace kpe
