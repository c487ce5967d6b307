#include <benchmark/benchmark.h>

#include "finduality/boolalg.hpp"
#include "finduality/category.hpp"
#include "finduality/contact.hpp"
#include "finduality/devries.hpp"
#include "finduality/extension.hpp"
#include "finduality/topology.hpp"

using namespace finduality;

static void BM_EnumerateTopologies4(benchmark::State& state) {
  for (auto _ : state) {
    auto spaces = enumerate_topologies(4);
    benchmark::DoNotOptimize(spaces.data());
  }
}
BENCHMARK(BM_EnumerateTopologies4);

// full kernel sweep on 4 atoms: 64 relations, brute-force cluster search each
static void BM_ClusterSweepB4(benchmark::State& state) {
  FinBoolAlg alg(4);
  auto kernels = all_kernels(alg);
  for (auto _ : state) {
    size_t total = 0;
    for (const auto& k : kernels)
      total += clusters(kernel_to_contact(alg, k)).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ClusterSweepB4);

static void BM_ExtensionBuildTopcat(benchmark::State& state) {
  Fixture fx = builtin_fixture("topcat");
  for (auto _ : state) {
    ExtensionPack pack = extension_from_fixture(fx);
    auto checks = verify_extension(pack);
    benchmark::DoNotOptimize(checks.data());
  }
}
BENCHMARK(BM_ExtensionBuildTopcat);

static void BM_PsiAClusterSpace(benchmark::State& state) {
  FinBoolAlg alg(static_cast<int>(state.range(0)));
  ContactRelation c = rho_s(alg);
  for (auto _ : state) {
    ClusterSpace cs = psi_a(c);
    benchmark::DoNotOptimize(cs.clusters.data());
  }
}
BENCHMARK(BM_PsiAClusterSpace)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
