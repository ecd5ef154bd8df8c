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

#include <atomic>
#include <cmath>
#include <mutex>
#include <optional>

#include "httplib.h"
#include "json.hpp"
#include "kpe/embed.hpp"
#include "kpe/error.hpp"
#include "kpe/textproc.hpp"

namespace kpe {
namespace {

using nlohmann::json;

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;    // prefix + "/embed"
};

Endpoint parse_endpoint(const std::string& url) {
  constexpr std::string_view kScheme = "http://";
  if (!std::string_view(url).starts_with(kScheme) || url.size() == kScheme.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "remote endpoint must be an http:// URL, got '" + url + "'", url);
  }
  const auto slash = url.find('/', kScheme.size());
  Endpoint e;
  e.origin = url.substr(0, slash);
  std::string prefix = slash == std::string::npos ? "" : url.substr(slash);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  e.path = prefix + "/embed";
  return e;
}

Error protocol_error(const std::string& what) {
  return Error(ErrorCode::kProtocol, "embedding service: " + what);
}

Vector to_vector(const json& j) {
  if (!j.is_array()) throw protocol_error("vector is not an array");
  Vector v;
  v.reserve(j.size());
  for (const json& x : j) {
    if (!x.is_number()) throw protocol_error("non-numeric vector component");
    v.push_back(x.get<double>());
    if (!std::isfinite(v.back())) throw protocol_error("non-finite component");
  }
  return v;
}

}  // namespace

struct RemoteProvider::Impl {
  Impl(std::string url, RemoteOptions opts)
      : endpoint(parse_endpoint(url)), options(opts) {
    if (options.expected_dim > 0) dim = options.expected_dim;
  }

  // Sends one request and returns the parsed body. `mode` is "text" or
  // "tokens".
  json post(std::string_view mode, const std::vector<std::string>& inputs) const {
    json body = {{"mode", std::string(mode)}, {"inputs", inputs}};
    httplib::Client client(endpoint.origin);
    client.set_connection_timeout(
        std::chrono::duration<double>(options.connect_timeout_s));
    client.set_read_timeout(std::chrono::duration<double>(options.read_timeout_s));
    requests.fetch_add(1);
    auto res = client.Post(endpoint.path, body.dump(), "application/json");
    if (!res) {
      throw Error(ErrorCode::kTransport,
                  "embedding service unreachable at " + endpoint.origin + ": " +
                      httplib::to_string(res.error()),
                  endpoint.origin);
    }
    if (res->status != 200) {
      throw Error(ErrorCode::kTransport,
                  "embedding service returned HTTP " + std::to_string(res->status),
                  endpoint.origin);
    }
    json reply = json::parse(res->body, nullptr, /*allow_exceptions=*/false);
    if (reply.is_discarded() || !reply.is_object()) {
      throw protocol_error("response is not a JSON object");
    }
    auto d = reply.find("dim");
    if (d == reply.end() || !d->is_number_unsigned() || d->get<std::size_t>() == 0) {
      throw protocol_error("missing or invalid 'dim'");
    }
    check_dim(d->get<std::size_t>());
    return reply;
  }

  void check_dim(std::size_t reported) const {
    std::lock_guard lock(mu);
    if (dim == 0) {
      dim = reported;
    } else if (dim != reported) {
      throw protocol_error("dimension " + std::to_string(reported) +
                           " differs from " + std::to_string(dim));
    }
  }

  void check_vector(const Vector& v) const {
    std::lock_guard lock(mu);
    if (v.size() != dim) {
      throw protocol_error("vector of length " + std::to_string(v.size()) +
                           " for dim " + std::to_string(dim));
    }
  }

  std::vector<Vector> fetch_texts(const std::vector<std::string>& inputs) const {
    json reply = post("text", inputs);
    auto vs = reply.find("vectors");
    if (vs == reply.end() || !vs->is_array()) {
      throw protocol_error("missing 'vectors'");
    }
    if (vs->size() != inputs.size()) {
      throw protocol_error("requested " + std::to_string(inputs.size()) +
                           " vectors, received " + std::to_string(vs->size()));
    }
    std::vector<Vector> out;
    for (const json& v : *vs) {
      out.push_back(to_vector(v));
      check_vector(out.back());
    }
    return out;
  }

  std::vector<Vector> fetch_tokens(const std::string& input,
                                   std::size_t expected) const {
    json reply = post("tokens", {input});
    auto tv = reply.find("token_vectors");
    if (tv == reply.end() || !tv->is_array() || tv->size() != 1) {
      throw protocol_error("expected 'token_vectors' with one entry");
    }
    const json& entry = (*tv)[0];
    if (!entry.is_array() || entry.size() != expected) {
      throw protocol_error("expected " + std::to_string(expected) +
                           " token vectors for input");
    }
    std::vector<Vector> out;
    for (const json& v : entry) {
      out.push_back(to_vector(v));
      check_vector(out.back());
    }
    return out;
  }

  std::optional<Vector> cached_text(const std::string& key) const {
    std::lock_guard lock(mu);
    auto it = text_cache.find(key);
    if (it == text_cache.end()) return std::nullopt;
    return it->second;
  }

  Endpoint endpoint;
  RemoteOptions options;
  mutable std::mutex mu;
  mutable std::size_t dim = 0;
  mutable std::atomic<std::size_t> requests{0};
  mutable std::unordered_map<std::string, Vector> text_cache;
  mutable std::unordered_map<std::string, std::vector<Vector>> token_cache;
};

RemoteProvider::RemoteProvider(std::string endpoint, RemoteOptions options)
    : impl_(std::make_unique<Impl>(std::move(endpoint), options)) {}

RemoteProvider::~RemoteProvider() = default;

std::size_t RemoteProvider::dim() const {
  std::lock_guard lock(impl_->mu);
  return impl_->dim;
}

std::size_t RemoteProvider::request_count() const {
  return impl_->requests.load();
}

Vector RemoteProvider::embed_text(std::string_view text) const {
  const std::string key(text);
  return embed_texts(std::span<const std::string>(&key, 1)).front();
}

std::vector<Vector> RemoteProvider::embed_texts(
    std::span<const std::string> texts) const {
  std::vector<Vector> out(texts.size());
  std::vector<std::string> missing;
  std::vector<std::size_t> missing_at;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (auto hit = impl_->cached_text(texts[i])) {
      out[i] = std::move(*hit);
    } else {
      missing.push_back(texts[i]);
      missing_at.push_back(i);
    }
  }
  const std::size_t batch = std::max<std::size_t>(1, impl_->options.max_batch);
  for (std::size_t begin = 0; begin < missing.size(); begin += batch) {
    const std::size_t end = std::min(missing.size(), begin + batch);
    std::vector<std::string> chunk(missing.begin() + begin, missing.begin() + end);
    std::vector<Vector> fetched = impl_->fetch_texts(chunk);
    std::lock_guard lock(impl_->mu);
    for (std::size_t j = 0; j < chunk.size(); ++j) {
      out[missing_at[begin + j]] = fetched[j];
      impl_->text_cache.emplace(chunk[j], std::move(fetched[j]));
    }
  }
  return out;
}

std::vector<TokenVector> RemoteProvider::embed_tokens(
    std::string_view text) const {
  const std::string key(text);
  auto words = word_tokens(text);
  std::vector<Vector> vectors;
  {
    std::lock_guard lock(impl_->mu);
    if (auto it = impl_->token_cache.find(key); it != impl_->token_cache.end()) {
      vectors = it->second;
    }
  }
  if (vectors.empty() && !words.empty()) {
    vectors = impl_->fetch_tokens(key, words.size());
    std::lock_guard lock(impl_->mu);
    impl_->token_cache.emplace(key, vectors);
  }
  std::vector<TokenVector> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    out.push_back({std::move(words[i]), std::move(vectors[i])});
  }
  return out;
}

}  // namespace kpe
