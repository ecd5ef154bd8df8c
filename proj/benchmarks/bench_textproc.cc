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

#include <benchmark/benchmark.h>

#include <string>

#include "kpe/io.hpp"
#include "kpe/normalizer.hpp"
#include "kpe/textproc.hpp"

namespace {

std::string abstracts() {
  return kpe::read_file(std::string(KPE_FIXTURE_DIR) + "/corpus10.jsonl");
}

void BM_Tokenize(benchmark::State& state) {
  const std::string text = abstracts();
  for (auto _ : state) benchmark::DoNotOptimize(kpe::tokenize(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Tokenize);

void BM_SplitSentences(benchmark::State& state) {
  const std::string text = abstracts();
  for (auto _ : state) benchmark::DoNotOptimize(kpe::split_sentences(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_SplitSentences);

void BM_Stemmer(benchmark::State& state) {
  const kpe::RussianStemmer stemmer;
  std::vector<std::string> words;
  for (const kpe::Token& t : kpe::tokenize(abstracts())) {
    if (t.is_word()) words.push_back(t.surface);
  }
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(stemmer.normalize(w));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * words.size()));
}
BENCHMARK(BM_Stemmer);

}  // namespace
