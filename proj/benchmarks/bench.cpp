// Copyright 2026 The entaudit Authors
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
#include <benchmark/benchmark.h>

#include "entaudit/axioms.hpp"
#include "entaudit/entropy.hpp"
#include "entaudit/measures.hpp"
#include "entaudit/random.hpp"
#include "entaudit/schmidt.hpp"
#include "entaudit/states.hpp"

namespace {

using namespace entaudit;

void BM_SchmidtDecompose(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const auto psi = random_pure_state(d, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(schmidt_decompose(psi));
}
BENCHMARK(BM_SchmidtDecompose)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_HermitianEigensystem(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.complex_gaussian();
  const auto h = a + a.adjoint();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigensystem(h));
}
BENCHMARK(BM_HermitianEigensystem)->Arg(4)->Arg(16)->Arg(64);

void BM_SvnMixed(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const auto rho = random_density(d, d, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(svn_mixed(rho));
}
BENCHMARK(BM_SvnMixed)->Arg(2)->Arg(4)->Arg(8);

void BM_Audit(benchmark::State& state) {
  const auto axiom = static_cast<Axiom>(state.range(0));
  const auto m = svn_measure();
  AuditOptions opt;
  opt.samples = 200;
  for (auto _ : state) benchmark::DoNotOptimize(run_audit(axiom, m, opt));
  state.SetLabel(std::string(axiom_name(axiom)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(opt.samples));
}
BENCHMARK(BM_Audit)
    ->Arg(static_cast<int>(Axiom::P1))
    ->Arg(static_cast<int>(Axiom::P2))
    ->Arg(static_cast<int>(Axiom::P4))
    ->Arg(static_cast<int>(Axiom::M5))
    ->Unit(benchmark::kMillisecond);

void BM_Khinchin(benchmark::State& state) {
  const auto s = shannon_functional();
  for (auto _ : state) benchmark::DoNotOptimize(audit_khinchin(s));
}
BENCHMARK(BM_Khinchin)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
