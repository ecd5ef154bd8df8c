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

// Snowball Russian stemmer, rewritten over UTF-32 strings.
// Reference: https://snowballstem.org/algorithms/russian/stemmer.html

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "kpe/error.hpp"
#include "kpe/normalizer.hpp"
#include "kpe/unicode.hpp"

namespace kpe {
namespace {

struct Ending {
  std::u32string_view text;
  bool needs_a_or_ya;  // group 1: must follow 'а' or 'я'
};

// Sorted longest-first at first use so that the first hit is the longest.
class EndingTable {
 public:
  EndingTable(std::initializer_list<std::u32string_view> group1,
              std::initializer_list<std::u32string_view> group2) {
    for (auto e : group1) endings_.push_back({e, true});
    for (auto e : group2) endings_.push_back({e, false});
    std::stable_sort(endings_.begin(), endings_.end(),
                     [](const Ending& a, const Ending& b) {
                       return a.text.size() > b.text.size();
                     });
  }

  const std::vector<Ending>& endings() const { return endings_; }

 private:
  std::vector<Ending> endings_;
};

const EndingTable& perfective_gerund() {
  static const EndingTable t({U"в", U"вши", U"вшись"},
                             {U"ив", U"ивши", U"ившись", U"ыв", U"ывши",
                              U"ывшись"});
  return t;
}

const EndingTable& adjective() {
  static const EndingTable t(
      {}, {U"ее", U"ие", U"ые", U"ое", U"ими", U"ыми", U"ей", U"ий", U"ый",
           U"ой", U"ем", U"им", U"ым", U"ом", U"его", U"ого", U"ему", U"ому",
           U"их", U"ых", U"ую", U"юю", U"ая", U"яя", U"ою", U"ею"});
  return t;
}

const EndingTable& participle() {
  static const EndingTable t({U"ем", U"нн", U"вш", U"ющ", U"щ"},
                             {U"ивш", U"ывш", U"ующ"});
  return t;
}

const EndingTable& reflexive() {
  static const EndingTable t({}, {U"ся", U"сь"});
  return t;
}

const EndingTable& verb() {
  static const EndingTable t(
      {U"ла", U"на", U"ете", U"йте", U"ли", U"й", U"л", U"ем", U"н", U"ло",
       U"но", U"ет", U"ют", U"ны", U"ть", U"ешь", U"нно"},
      {U"ила", U"ыла", U"ена", U"ейте", U"уйте", U"ите", U"или", U"ыли",
       U"ей", U"уй", U"ил", U"ыл", U"им", U"ым", U"ен", U"ило", U"ыло",
       U"ено", U"ят", U"ует", U"уют", U"ит", U"ыт", U"ены", U"ить", U"ыть",
       U"ишь", U"ую", U"ю"});
  return t;
}

const EndingTable& noun() {
  static const EndingTable t(
      {}, {U"а", U"ев", U"ов", U"ие", U"ье", U"е", U"иями", U"ями", U"ами",
           U"еи", U"ии", U"и", U"ией", U"ей", U"ой", U"ий", U"й", U"иям",
           U"ям", U"ием", U"ем", U"ам", U"ом", U"о", U"у", U"ах", U"иях",
           U"ях", U"ы", U"ь", U"ию", U"ью", U"ю", U"ия", U"ья", U"я"});
  return t;
}

const EndingTable& derivational() {
  static const EndingTable t({}, {U"ост", U"ость"});
  return t;
}

bool is_vowel(char32_t c) {
  switch (c) {
    case U'а': case U'е': case U'и': case U'о': case U'у':
    case U'ы': case U'э': case U'ю': case U'я':
      return true;
    default:
      return false;
  }
}

bool ends_with(const std::u32string& w, std::u32string_view suffix) {
  return w.size() >= suffix.size() &&
         std::u32string_view(w).substr(w.size() - suffix.size()) == suffix;
}

// Regions are computed once up front. `rv_` is the start of RV; no ending
// may reach before it.
class Stemming {
 public:
  explicit Stemming(std::u32string word) : w_(std::move(word)) {
    const std::size_t n = w_.size();
    rv_ = n;
    r2_ = n;
    std::size_t i = 0;
    while (i < n && !is_vowel(w_[i])) ++i;
    if (i >= n) return;
    rv_ = i + 1;
    // R1: after the first non-vowel following a vowel.
    i = rv_;
    while (i < n && is_vowel(w_[i])) ++i;
    if (i >= n) return;
    const std::size_t r1 = i + 1;
    i = r1;
    while (i < n && !is_vowel(w_[i])) ++i;
    while (i < n && is_vowel(w_[i])) ++i;
    if (i >= n) return;
    r2_ = i + 1;
  }

  std::u32string run() {
    if (rv_ >= w_.size()) return std::move(w_);
    step1();
    step2();
    step3();
    step4();
    return std::move(w_);
  }

 private:
  // Longest ending of `table` lying inside RV. Returns nullptr when no
  // ending matches; group-1 endings require a preceding 'а'/'я' in RV and
  // a failed condition fails the whole lookup.
  const Ending* find(const EndingTable& table) const {
    for (const Ending& e : table.endings()) {
      if (!ends_with(w_, e.text)) continue;
      const std::size_t start = w_.size() - e.text.size();
      if (start < rv_) continue;
      if (e.needs_a_or_ya) {
        if (start == 0 || start - 1 < rv_) return nullptr;
        const char32_t prev = w_[start - 1];
        if (prev != U'а' && prev != U'я') return nullptr;
      }
      return &e;
    }
    return nullptr;
  }

  bool remove(const EndingTable& table) {
    const Ending* e = find(table);
    if (e == nullptr) return false;
    w_.resize(w_.size() - e->text.size());
    return true;
  }

  void step1() {
    if (remove(perfective_gerund())) return;
    remove(reflexive());
    if (remove(adjective())) {
      remove(participle());
      return;
    }
    if (remove(verb())) return;
    remove(noun());
  }

  void step2() {
    if (w_.size() > rv_ && w_.back() == U'и') w_.pop_back();
  }

  void step3() {
    const Ending* e = find(derivational());
    if (e != nullptr && w_.size() - e->text.size() >= r2_) {
      w_.resize(w_.size() - e->text.size());
    }
  }

  bool ends_in_double_n() const {
    return w_.size() >= 2 && w_.size() - 2 >= rv_ && ends_with(w_, U"нн");
  }

  void step4() {
    const auto in_rv = [&](std::u32string_view s) {
      return ends_with(w_, s) && w_.size() - s.size() >= rv_;
    };
    if (in_rv(U"ейше")) {
      w_.resize(w_.size() - 4);
      if (ends_in_double_n()) w_.pop_back();
    } else if (in_rv(U"ейш")) {
      w_.resize(w_.size() - 3);
      if (ends_in_double_n()) w_.pop_back();
    } else if (ends_in_double_n()) {
      w_.pop_back();
    } else if (in_rv(U"ь")) {
      w_.pop_back();
    }
  }

  std::u32string w_;
  std::size_t rv_;
  std::size_t r2_;
};

}  // namespace

std::string LowercaseNormalizer::normalize(std::string_view word) const {
  return utf8::to_lower(word);
}

std::u32string RussianStemmer::stem_once(std::u32string word) {
  return Stemming(std::move(word)).run();
}

std::string RussianStemmer::normalize(std::string_view word) const {
  std::u32string w = utf8::to_u32(word);
  bool cyrillic = false;
  for (char32_t& c : w) {
    c = utf8::to_lower(c);
    if (c == U'ё') c = U'е';
    cyrillic = cyrillic || utf8::is_cyrillic(c);
  }
  if (!cyrillic) return utf8::from_u32(w);
  // Each pass either shortens the word or leaves it unchanged.
  for (;;) {
    std::u32string next = stem_once(w);
    if (next == w) break;
    w = std::move(next);
  }
  return utf8::from_u32(w);
}

DictionaryNormalizer::DictionaryNormalizer(
    std::unordered_map<std::string, std::string> table,
    std::shared_ptr<const Normalizer> fallback)
    : table_(std::move(table)), fallback_(std::move(fallback)) {}

DictionaryNormalizer DictionaryNormalizer::from_file(
    const std::filesystem::path& path,
    std::shared_ptr<const Normalizer> fallback) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open lemma table " + path.string(),
                path.string());
  }
  std::unordered_map<std::string, std::string> table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw Error(ErrorCode::kMalformedRecord,
                  path.string() + ":" + std::to_string(line_no) +
                      ": expected surface<TAB>lemma",
                  path.string(), line_no);
    }
    std::string lemma = utf8::to_lower(line.substr(tab + 1));
    std::erase_if(lemma, [](char c) { return c == ' ' || c == '\t'; });
    table.emplace(utf8::to_lower(line.substr(0, tab)), std::move(lemma));
  }
  return DictionaryNormalizer(std::move(table), std::move(fallback));
}

std::string DictionaryNormalizer::normalize(std::string_view word) const {
  const std::string lower = utf8::to_lower(word);
  if (auto it = table_.find(lower); it != table_.end()) return it->second;
  return fallback_ ? fallback_->normalize(lower) : lower;
}

}  // namespace kpe
