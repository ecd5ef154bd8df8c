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

// Brute-force reference implementations used by the unit and acceptance
// suites. They work on ASCII phrases built from whitespace-separated words
// and share no scoring code with the library.

#ifndef KPE_TESTS_SUPPORT_ORACLES_HPP_
#define KPE_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kpe/embed.hpp"

#ifndef KPE_FIXTURE_DIR
#error "KPE_FIXTURE_DIR must be defined by the build"
#endif

namespace kpe::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(KPE_FIXTURE_DIR) / name;
}

struct PRF {
  double p = 0.0;
  double r = 0.0;
  double f = 0.0;
};

inline PRF prf(double p, double r) {
  return {p, r, p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0};
}

inline std::string ascii_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline std::vector<std::string> all_words(const std::vector<std::string>& phrases) {
  std::vector<std::string> out;
  for (const auto& p : phrases) {
    for (auto& w : split_ws(p)) out.push_back(ascii_lower(w));
  }
  return out;
}

// Clipped unigram overlap by explicit counting.
inline PRF rouge1_oracle(const std::vector<std::string>& cand,
                         const std::vector<std::string>& ref) {
  const auto c = all_words(cand);
  const auto r = all_words(ref);
  if (c.empty() || r.empty()) return {};
  std::map<std::string, int> cc, rc;
  for (const auto& w : c) ++cc[w];
  for (const auto& w : r) ++rc[w];
  int overlap = 0;
  for (const auto& [w, n] : cc) {
    auto it = rc.find(w);
    if (it != rc.end()) overlap += std::min(n, it->second);
  }
  return prf(static_cast<double>(overlap) / c.size(),
             static_cast<double>(overlap) / r.size());
}

inline PRF fullmatch_oracle(const std::vector<std::string>& cand,
                            const std::vector<std::string>& ref) {
  const auto key = [](const std::vector<std::string>& phrases) {
    std::set<std::string> s;
    for (const auto& p : phrases) {
      std::string joined;
      for (const auto& w : split_ws(p)) joined += (joined.empty() ? "" : " ") + ascii_lower(w);
      if (!joined.empty()) s.insert(joined);
    }
    return s;
  };
  const auto c = key(cand);
  const auto r = key(ref);
  if (c.empty() && r.empty()) return {1.0, 1.0, 1.0};
  if (c.empty() || r.empty()) return {};
  std::vector<std::string> inter;
  std::set_intersection(c.begin(), c.end(), r.begin(), r.end(), std::back_inserter(inter));
  return prf(static_cast<double>(inter.size()) / c.size(),
             static_cast<double>(inter.size()) / r.size());
}

inline double plain_cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

// Every candidate-reference pair is scored; P and R are the means of the
// row and column maxima, clamped to [0, 1].
inline PRF bertscore_oracle(const std::vector<std::string>& cand,
                            const std::vector<std::string>& ref,
                            const HashProvider& provider) {
  const auto c = all_words(cand);
  const auto r = all_words(ref);
  if (c.empty() || r.empty()) return {};
  std::vector<std::vector<double>> sim(c.size(), std::vector<double>(r.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      sim[i][j] = plain_cosine(provider.word_vector(c[i]), provider.word_vector(r[j]));
    }
  }
  double p = 0.0, rr = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    double best = -2.0;
    for (std::size_t j = 0; j < r.size(); ++j) best = std::max(best, sim[i][j]);
    p += best;
  }
  for (std::size_t j = 0; j < r.size(); ++j) {
    double best = -2.0;
    for (std::size_t i = 0; i < c.size(); ++i) best = std::max(best, sim[i][j]);
    rr += best;
  }
  p = std::clamp(p / c.size(), 0.0, 1.0);
  rr = std::clamp(rr / r.size(), 0.0, 1.0);
  return prf(p, rr);
}

// Enumerates every ordered selection of min(k, n) candidates and keeps the
// one in which each pick attains the maximal MMR objective given the picks
// before it (lower index on ties). Redundancy against an empty selection
// is 0.
inline std::vector<std::size_t> mmr_oracle(
    const std::vector<double>& relevance, std::size_t k, double diversity,
    const std::function<double(std::size_t, std::size_t)>& pairwise) {
  const std::size_t n = relevance.size();
  const std::size_t m = std::min(k, n);
  const auto objective = [&](std::size_t cand, const std::vector<std::size_t>& chosen) {
    double red = 0.0;
    if (!chosen.empty()) {
      red = -2.0;
      for (std::size_t s : chosen) red = std::max(red, pairwise(cand, s));
    }
    return (1.0 - diversity) * relevance[cand] - diversity * red;
  };
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> answer;
  std::size_t found = 0;
  do {
    std::vector<std::size_t> seq(idx.begin(), idx.begin() + m);
    if (!seen.insert(seq).second) continue;
    bool greedy = true;
    std::vector<std::size_t> chosen;
    for (std::size_t step = 0; step < m && greedy; ++step) {
      const double mine = objective(seq[step], chosen);
      for (std::size_t other = 0; other < n; ++other) {
        if (std::find(chosen.begin(), chosen.end(), other) != chosen.end() ||
            other == seq[step]) {
          continue;
        }
        const double theirs = objective(other, chosen);
        if (theirs > mine || (theirs == mine && other < seq[step])) {
          greedy = false;
          break;
        }
      }
      chosen.push_back(seq[step]);
    }
    if (greedy) {
      answer = seq;
      ++found;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  if (found != 1) return {};
  return answer;
}

// Random keyphrase lists over a small mixed-case vocabulary: up to
// `max_phrases` phrases of 1..`max_tokens` words.
class ListGenerator {
 public:
  explicit ListGenerator(std::uint32_t seed) : rng_(seed) {}

  std::vector<std::string> list(int max_phrases, int max_tokens) {
    std::uniform_int_distribution<int> count(0, max_phrases);
    std::uniform_int_distribution<int> len(1, max_tokens);
    std::uniform_int_distribution<std::size_t> pick(0, kVocab.size() - 1);
    std::bernoulli_distribution upper(0.2);
    std::vector<std::string> out(count(rng_));
    for (auto& phrase : out) {
      const int n = len(rng_);
      for (int i = 0; i < n; ++i) {
        std::string w = kVocab[pick(rng_)];
        if (upper(rng_)) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
        phrase += (i ? " " : "") + w;
      }
    }
    return out;
  }

  std::mt19937& rng() { return rng_; }

 private:
  static inline const std::vector<std::string> kVocab = {
      "graph", "model", "neural", "network", "text",  "search",
      "query", "index", "tree",   "data",    "layer", "token"};
  std::mt19937 rng_;
};

}  // namespace kpe::testing

#endif  // KPE_TESTS_SUPPORT_ORACLES_HPP_
