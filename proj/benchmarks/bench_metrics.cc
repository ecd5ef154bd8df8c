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
#include <vector>

#include "kpe/embed.hpp"
#include "kpe/metrics.hpp"
#include "kpe/normalizer.hpp"

namespace {

const std::vector<std::string> kCandidates = {
    "нейронные сети", "графы знаний", "классификация графов", "обучение с учителем",
    "свёрточные сети", "поиск информации", "машинный перевод", "языковые модели",
    "извлечение ключевых слов", "оценка качества"};
const std::vector<std::string> kReferences = {
    "нейронная сеть", "граф знаний", "классификация", "машинное обучение", "ключевые слова"};

void BM_Rouge1(benchmark::State& state) {
  const kpe::RussianStemmer n;
  for (auto _ : state) benchmark::DoNotOptimize(kpe::rouge1(kCandidates, kReferences, n));
}
BENCHMARK(BM_Rouge1);

void BM_FullMatchF1(benchmark::State& state) {
  const kpe::RussianStemmer n;
  for (auto _ : state) benchmark::DoNotOptimize(kpe::fullmatch_f1(kCandidates, kReferences, n));
}
BENCHMARK(BM_FullMatchF1);

void BM_BertScoreHash(benchmark::State& state) {
  const kpe::HashProvider p(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(kpe::bertscore(kCandidates, kReferences, p));
}
BENCHMARK(BM_BertScoreHash)->Arg(64)->Arg(768);

}  // namespace
