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

// Minimal UTF-8 helpers covering the Latin and Cyrillic ranges the
// tokenizer cares about. Not a general Unicode database.

#ifndef KPE_UNICODE_HPP_
#define KPE_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace kpe::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

struct Decoded {
  char32_t cp;
  std::size_t length;  // bytes consumed, always >= 1
};

// Decodes one code point at `pos`. Invalid sequences yield U+FFFD and
// consume a single byte.
Decoded decode(std::string_view text, std::size_t pos);

void append(std::string& out, char32_t cp);

std::u32string to_u32(std::string_view text);
std::string from_u32(std::u32string_view text);

bool is_latin_letter(char32_t cp);
bool is_cyrillic(char32_t cp);
inline bool is_letter(char32_t cp) {
  return is_latin_letter(cp) || is_cyrillic(cp);
}
inline bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }
bool is_space(char32_t cp);
bool is_hyphen(char32_t cp);

char32_t to_lower(char32_t cp);
inline bool is_upper(char32_t cp) { return to_lower(cp) != cp; }

std::string to_lower(std::string_view text);

bool contains_cyrillic(std::string_view text);

// Number of code points.
std::size_t length(std::string_view text);

}  // namespace kpe::utf8

#endif  // KPE_UNICODE_HPP_
