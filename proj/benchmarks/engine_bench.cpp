// Copyright 2026 The scoringcg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Engine micro-benchmarks. Games are hash-consed and several operations are
// memoized process-wide, so repeated iterations measure the warm path;
// the random-game benchmarks draw fresh games to keep caches cold-ish.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "scoringcg/comparison.hpp"
#include "scoringcg/game.hpp"
#include "scoringcg/scores.hpp"
#include "scoringcg/universes.hpp"

namespace {

using namespace scoringcg;

Game random_game(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> score(-3, 3);
  std::uniform_int_distribution<int> width(0, 2);
  auto side = [&]() {
    int n = depth == 0 ? 0 : width(rng);
    if (n == 0) return Side::atom(Score(score(rng)));
    std::vector<Game> o;
    for (int i = 0; i < n; ++i) o.push_back(random_game(rng, depth - 1));
    return Side::of(std::move(o));
  };
  Side l = side();
  return Game::make(std::move(l), side());
}

void BM_SumFigureTwo(benchmark::State& state) {
  Game a = Game::make(Side::atom(3), Side::of({Game::make(Side::of({Game::number(2)}),
                                                          Side::of({Game::number(1)}))}));
  Game b = Game::make(Side::of({Game::number(-3)}), Side::atom(0));
  for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_SumFigureTwo);

void BM_ScoresOfRandomSum(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Game x = random_game(rng, depth) + random_game(rng, depth);
    benchmark::DoNotOptimize(scores(x));
  }
}
BENCHMARK(BM_ScoresOfRandomSum)->DenseRange(2, 4);

void BM_PassAllowedScores(benchmark::State& state) {
  std::mt19937_64 rng(11);
  for (auto _ : state) {
    Game x = random_game(rng, 3);
    benchmark::DoNotOptimize(pass_allowed_left_score(x));
    benchmark::DoNotOptimize(pass_allowed_right_score(x));
  }
}
BENCHMARK(BM_PassAllowedScores);

void BM_EnumerateDayTwo(benchmark::State& state) {
  UniverseFilter f;
  f.max_day = 2;
  f.max_options = 1;
  f.predicate = UniversePredicate::kGuaranteed;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(f).size());
}
BENCHMARK(BM_EnumerateDayTwo)->Unit(benchmark::kMillisecond);

void BM_ProtectedAgainstZero(benchmark::State& state) {
  UniverseFilter f;
  f.max_day = 1;
  f.predicate = UniversePredicate::kGuaranteed;
  std::vector<Game> pool = enumerate(f);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ge_number(pool[i], 0));
    i = (i + 1) % pool.size();
  }
}
BENCHMARK(BM_ProtectedAgainstZero);

}  // namespace

BENCHMARK_MAIN();
