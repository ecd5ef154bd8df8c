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

#ifndef KPE_NORMALIZER_HPP_
#define KPE_NORMALIZER_HPP_

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>

#include "kpe/textproc.hpp"

namespace kpe {

// Lowercases; nothing else.
class LowercaseNormalizer final : public Normalizer {
 public:
  std::string_view name() const override { return "lowercase"; }
  std::string normalize(std::string_view word) const override;
};

// Snowball Russian stemmer over lowercased input, with 'ё' folded to 'е'.
// Words without Cyrillic letters are only lowercased. The single Snowball
// pass is repeated until the stem stops changing so that the normalizer is
// idempotent.
class RussianStemmer final : public Normalizer {
 public:
  std::string_view name() const override { return "stemmer"; }
  std::string normalize(std::string_view word) const override;

  // One pass of the Snowball algorithm on an already lowercased word.
  static std::u32string stem_once(std::u32string word);
};

// Lemma lookup table loaded from a TSV file (`surface<TAB>lemma`, one pair
// per line, '#' comments). Lookups are on the lowercased word; unknown
// words fall back to `fallback` (lowercase when null).
class DictionaryNormalizer final : public Normalizer {
 public:
  explicit DictionaryNormalizer(
      std::unordered_map<std::string, std::string> table,
      std::shared_ptr<const Normalizer> fallback = nullptr);

  static DictionaryNormalizer from_file(
      const std::filesystem::path& path,
      std::shared_ptr<const Normalizer> fallback = nullptr);

  std::string_view name() const override { return "external"; }
  std::string normalize(std::string_view word) const override;
  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_map<std::string, std::string> table_;
  std::shared_ptr<const Normalizer> fallback_;
};

}  // namespace kpe

#endif  // KPE_NORMALIZER_HPP_
