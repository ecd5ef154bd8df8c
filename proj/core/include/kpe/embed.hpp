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

// Dense text and token embeddings.
//
// Three providers share one interface:
//   HashProvider    seeded pseudo-random unit vectors per word; hermetic
//   RemoteProvider  HTTP client for an embedding service (see below)
//   CacheProvider   strict offline lookup in a precomputed vector file
//
// Wire protocol (RemoteProvider):
//   POST {endpoint}/embed
//   request  {"mode": "text" | "tokens", "inputs": [string, ...]}
//   response {"dim": int, "vectors": [[...], ...]}            (text)
//            {"dim": int, "token_vectors": [[[...], ...], ...]} (tokens)
// In token mode the server returns one vector per word token of this
// library's tokenize(), in order.
//
// Cache file (CacheProvider): JSON lines
//   {"key": string, "mode": "text" | "tokens", "vectors": [[...], ...]}
// Text records hold exactly one vector.

#ifndef KPE_EMBED_HPP_
#define KPE_EMBED_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kpe {

using Vector = std::vector<double>;

// dot(a, b) / (|a| |b|), clamped to [-1, 1]. Throws kDimensionMismatch or
// kZeroVector.
double cosine(std::span<const double> a, std::span<const double> b);

struct TokenVector {
  std::string token;
  Vector vector;
};

// Implementations are deterministic for equal input and safe for
// concurrent calls.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  // Vector dimension; 0 while unknown (a remote provider learns it from the
  // first response unless configured).
  virtual std::size_t dim() const = 0;

  virtual Vector embed_text(std::string_view text) const = 0;

  // One entry per word token of tokenize(text), in order.
  virtual std::vector<TokenVector> embed_tokens(std::string_view text) const = 0;

  // Batched form of embed_text. The default loops; remote providers send
  // one request for all uncached inputs.
  virtual std::vector<Vector> embed_texts(
      std::span<const std::string> texts) const;
};

class HashProvider final : public EmbeddingProvider {
 public:
  // Throws kInvalidArgument when dim < 2.
  HashProvider(std::size_t dim, std::uint64_t seed);

  std::size_t dim() const override { return dim_; }
  Vector embed_text(std::string_view text) const override;
  std::vector<TokenVector> embed_tokens(std::string_view text) const override;

  // Unit vector for one word; the word is lowercased first.
  Vector word_vector(std::string_view word) const;

 private:
  std::size_t dim_;
  std::uint64_t seed_;
};

struct RemoteOptions {
  std::size_t expected_dim = 0;  // 0 = accept whatever the server reports
  double connect_timeout_s = 5.0;
  double read_timeout_s = 120.0;
  std::size_t max_batch = 64;
};

class RemoteProvider final : public EmbeddingProvider {
 public:
  // `endpoint` is "http://host[:port][/prefix]"; requests go to
  // prefix + "/embed". Throws kInvalidArgument on a malformed URL.
  explicit RemoteProvider(std::string endpoint, RemoteOptions options = {});
  ~RemoteProvider() override;

  std::size_t dim() const override;
  Vector embed_text(std::string_view text) const override;
  std::vector<TokenVector> embed_tokens(std::string_view text) const override;
  std::vector<Vector> embed_texts(
      std::span<const std::string> texts) const override;

  // Number of HTTP requests issued so far.
  std::size_t request_count() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

class CacheProvider final : public EmbeddingProvider {
 public:
  // Throws kIo or kMalformedCache.
  static CacheProvider load(const std::filesystem::path& path);
  static CacheProvider parse(std::string_view contents,
                             std::string source = "<memory>");

  std::size_t dim() const override { return dim_; }
  // Throws kMissingEmbedding for unknown keys.
  Vector embed_text(std::string_view text) const override;
  std::vector<TokenVector> embed_tokens(std::string_view text) const override;

  std::size_t size() const { return text_.size() + tokens_.size(); }

 private:
  std::size_t dim_ = 0;
  std::unordered_map<std::string, Vector> text_;
  std::unordered_map<std::string, std::vector<Vector>> tokens_;
};

// Serializes one cache record line (no trailing newline).
std::string cache_record(std::string_view key, std::string_view mode,
                         std::span<const Vector> vectors);

// Builds a provider from a spec string:
//   "hash[:<dim>]"   HashProvider (default dim 64) seeded with `seed`
//   "cache:<path>"   CacheProvider
//   "remote:<url>"   RemoteProvider
// Throws kInvalidArgument for an unknown scheme.
std::shared_ptr<const EmbeddingProvider> make_provider(std::string_view spec,
                                                       std::uint64_t seed);

}  // namespace kpe

#endif  // KPE_EMBED_HPP_
