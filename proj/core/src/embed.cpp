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

#include "kpe/embed.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "kpe/error.hpp"
#include "kpe/io.hpp"
#include "kpe/textproc.hpp"
#include "kpe/unicode.hpp"
#include "text_util.hpp"

namespace kpe {
namespace {

using nlohmann::json;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

void normalize_in_place(Vector& v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (norm == 0.0) return;
  for (double& x : v) x /= norm;
}

Error malformed_cache(const std::string& source, std::size_t line,
                      const std::string& what) {
  return Error(ErrorCode::kMalformedCache,
               source + ":" + std::to_string(line) + ": " + what, source, line);
}

Vector parse_vector(const json& j, const std::string& source,
                    std::size_t line) {
  if (!j.is_array() || j.empty()) {
    throw malformed_cache(source, line, "vector must be a non-empty array");
  }
  Vector v;
  v.reserve(j.size());
  for (const json& x : j) {
    if (!x.is_number()) throw malformed_cache(source, line, "non-numeric component");
    const double d = x.get<double>();
    if (!std::isfinite(d)) throw malformed_cache(source, line, "non-finite component");
    v.push_back(d);
  }
  return v;
}

}  // namespace

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cosine of vectors with dimensions " + std::to_string(a.size()) +
                    " and " + std::to_string(b.size()));
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) {
    throw Error(ErrorCode::kZeroVector, "cosine of a zero vector");
  }
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

std::vector<Vector> EmbeddingProvider::embed_texts(
    std::span<const std::string> texts) const {
  std::vector<Vector> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(embed_text(t));
  return out;
}

HashProvider::HashProvider(std::size_t dim, std::uint64_t seed)
    : dim_(dim), seed_(seed) {
  if (dim < 2) {
    throw Error(ErrorCode::kInvalidArgument, "hash provider needs dim >= 2");
  }
}

Vector HashProvider::word_vector(std::string_view word) const {
  std::uint64_t state = fnv1a(utf8::to_lower(word));
  std::uint64_t seed_state = seed_;
  state ^= splitmix64(seed_state);
  Vector v(dim_);
  for (;;) {
    for (double& x : v) {
      // 53 random bits mapped to [-1, 1).
      x = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-52 - 1.0;
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    if (norm > 0.0) break;  // practically unreachable
  }
  normalize_in_place(v);
  return v;
}

std::vector<TokenVector> HashProvider::embed_tokens(std::string_view text) const {
  std::vector<TokenVector> out;
  for (std::string& w : word_tokens(text)) {
    Vector v = word_vector(w);
    out.push_back({std::move(w), std::move(v)});
  }
  return out;
}

Vector HashProvider::embed_text(std::string_view text) const {
  const auto words = word_tokens(text);
  if (words.empty()) {
    // No word tokens: embed the trimmed string as a single unit.
    return word_vector(trim(text));
  }
  Vector mean(dim_, 0.0);
  for (const std::string& w : words) {
    const Vector v = word_vector(w);
    for (std::size_t i = 0; i < dim_; ++i) mean[i] += v[i];
  }
  for (double& x : mean) x /= static_cast<double>(words.size());
  normalize_in_place(mean);
  return mean;
}

CacheProvider CacheProvider::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

CacheProvider CacheProvider::parse(std::string_view contents,
                                   std::string source) {
  CacheProvider cache;
  std::size_t line_no = 0;
  for_each_line(contents, [&](std::string_view line) {
    ++line_no;
    if (trim(line).empty()) return;
    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) {
      throw malformed_cache(source, line_no, "not a JSON object");
    }
    auto key = j.find("key");
    auto mode = j.find("mode");
    auto vectors = j.find("vectors");
    if (key == j.end() || !key->is_string() || mode == j.end() ||
        !mode->is_string() || vectors == j.end() || !vectors->is_array()) {
      throw malformed_cache(source, line_no,
                            "expected fields key, mode and vectors");
    }
    std::vector<Vector> vs;
    for (const json& v : *vectors) {
      vs.push_back(parse_vector(v, source, line_no));
      if (cache.dim_ == 0) cache.dim_ = vs.back().size();
      if (vs.back().size() != cache.dim_) {
        throw malformed_cache(source, line_no,
                              "inconsistent dimension " +
                                  std::to_string(vs.back().size()) + " vs " +
                                  std::to_string(cache.dim_));
      }
    }
    const std::string m = mode->get<std::string>();
    if (m == "text") {
      if (vs.size() != 1) {
        throw malformed_cache(source, line_no,
                              "text records hold exactly one vector");
      }
      cache.text_[key->get<std::string>()] = std::move(vs.front());
    } else if (m == "tokens") {
      const std::size_t words = word_tokens(key->get<std::string>()).size();
      if (vs.size() != words) {
        throw malformed_cache(source, line_no,
                              std::to_string(vs.size()) + " token vectors for " +
                                  std::to_string(words) + " word tokens");
      }
      cache.tokens_[key->get<std::string>()] = std::move(vs);
    } else {
      throw malformed_cache(source, line_no, "unknown mode '" + m + "'");
    }
  });
  if (cache.dim_ == 0) {
    throw Error(ErrorCode::kMalformedCache, source + ": no vectors", source);
  }
  return cache;
}

Vector CacheProvider::embed_text(std::string_view text) const {
  auto it = text_.find(std::string(text));
  if (it == text_.end()) {
    throw Error(ErrorCode::kMissingEmbedding,
                "no cached text embedding for '" + std::string(text) + "'",
                std::string(text));
  }
  return it->second;
}

std::vector<TokenVector> CacheProvider::embed_tokens(
    std::string_view text) const {
  auto it = tokens_.find(std::string(text));
  if (it == tokens_.end()) {
    throw Error(ErrorCode::kMissingEmbedding,
                "no cached token embeddings for '" + std::string(text) + "'",
                std::string(text));
  }
  auto words = word_tokens(text);
  if (words.size() != it->second.size()) {
    throw Error(ErrorCode::kMalformedCache,
                "cached token vectors for '" + std::string(text) + "' cover " +
                    std::to_string(it->second.size()) + " tokens, expected " +
                    std::to_string(words.size()),
                std::string(text));
  }
  std::vector<TokenVector> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    out.push_back({std::move(words[i]), it->second[i]});
  }
  return out;
}

std::string cache_record(std::string_view key, std::string_view mode,
                         std::span<const Vector> vectors) {
  json j;
  j["key"] = std::string(key);
  j["mode"] = std::string(mode);
  j["vectors"] = json::array();
  for (const Vector& v : vectors) j["vectors"].push_back(v);
  return j.dump();
}

std::shared_ptr<const EmbeddingProvider> make_provider(std::string_view spec,
                                                       std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string_view scheme = spec.substr(0, colon);
  const std::string_view rest =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (scheme == "hash") {
    std::size_t dim = 64;
    if (!rest.empty()) {
      try {
        dim = std::stoul(std::string(rest));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kInvalidArgument,
                    "bad hash provider dimension '" + std::string(rest) + "'");
      }
    }
    return std::make_shared<HashProvider>(dim, seed);
  }
  if (scheme == "cache" && !rest.empty()) {
    return std::make_shared<CacheProvider>(
        CacheProvider::load(std::filesystem::path(std::string(rest))));
  }
  if (scheme == "remote" && !rest.empty()) {
    return std::make_shared<RemoteProvider>(std::string(rest));
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown provider spec '" + std::string(spec) +
                  "' (expected hash[:dim], cache:<path> or remote:<url>)");
}

}  // namespace kpe
