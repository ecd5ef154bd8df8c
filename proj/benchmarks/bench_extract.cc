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

#include "kpe/corpus.hpp"
#include "kpe/embed.hpp"
#include "kpe/extract.hpp"
#include "kpe/normalizer.hpp"

namespace {

const kpe::Corpus& corpus() {
  static const kpe::Corpus c = kpe::load_corpus(std::string(KPE_FIXTURE_DIR) + "/corpus10.jsonl");
  return c;
}

void BM_TermFreq(benchmark::State& state) {
  const kpe::RussianStemmer n;
  for (auto _ : state) {
    for (const kpe::Document& d : corpus().documents()) {
      benchmark::DoNotOptimize(kpe::extract_termfreq(d, 10, n));
    }
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * corpus().size()));
}
BENCHMARK(BM_TermFreq);

void BM_Yake(benchmark::State& state) {
  const kpe::RussianStemmer n;
  for (auto _ : state) {
    for (const kpe::Document& d : corpus().documents()) {
      benchmark::DoNotOptimize(kpe::extract_yake(d, 10, n));
    }
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * corpus().size()));
}
BENCHMARK(BM_Yake);

void BM_EmbedRank(benchmark::State& state) {
  const kpe::RussianStemmer n;
  const kpe::HashProvider p(128, 42);
  kpe::EmbedRankOptions o;
  o.diversity = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    for (const kpe::Document& d : corpus().documents()) {
      benchmark::DoNotOptimize(kpe::extract_embedrank(d, 10, p, n, o));
    }
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * corpus().size()));
}
BENCHMARK(BM_EmbedRank)->Arg(0)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
