// Throughput of the core operations on random inputs of growing size.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "hfset/apg.hpp"
#include "hfset/back_and_forth.hpp"
#include "hfset/bisimulation.hpp"
#include "hfset/flat_system.hpp"
#include "hfset/membership_graph.hpp"
#include "hfset/oracles.hpp"
#include "hfset/rado.hpp"
#include "hfset/serialize.hpp"
#include "hfset/universe.hpp"
#include "hfset/witnesses.hpp"

namespace {

using namespace hfset;

// Random digraph with about three successors per node.
std::vector<std::vector<std::uint32_t>> random_digraph(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> succ(n);
  for (auto& kids : succ) {
    for (int k = 0; k < 3; ++k) kids.push_back(static_cast<std::uint32_t>(rng() % n));
  }
  return succ;
}

// Accessible picture: a random tree from the root plus extra random edges.
Apg random_apg(std::mt19937_64& rng, std::size_t n) {
  Apg g;
  g.children.resize(n);
  for (std::size_t v = 1; v < n; ++v) g.children[rng() % v].push_back(v);
  for (std::size_t e = 0; e < n; ++e) g.children[rng() % n].push_back(rng() % n);
  for (auto& kids : g.children) {
    std::sort(kids.begin(), kids.end());
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
  }
  return g;
}

FlatSystem random_system(std::mt19937_64& rng, Universe& u, std::size_t vars) {
  FlatSystem sys;
  sys.atoms.push_back({"a", u.vn(3)});
  for (std::size_t i = 0; i < vars; ++i) {
    Equation eq{"x" + std::to_string(i), {}};
    if (rng() % 2 == 0) eq.members.push_back("a");
    for (int k = 0; k < 3; ++k) eq.members.push_back("x" + std::to_string(rng() % vars));
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

void BM_MaximumBisimulation(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto g = random_digraph(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximum_bisimulation(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaximumBisimulation)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

void BM_Canonicalize(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<Apg> graphs;
  for (int k = 0; k < 64; ++k) graphs.push_back(random_apg(rng, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    Universe u;
    for (const Apg& g : graphs) benchmark::DoNotOptimize(u.canonicalize(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_Canonicalize)->Arg(4)->Arg(12)->Arg(48);

void BM_Solve(benchmark::State& state) {
  std::mt19937_64 rng(3);
  Universe setup;
  FlatSystem sys = random_system(rng, setup, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Universe u;
    sys.atoms.front().value = u.vn(3);  // handles are per universe
    benchmark::DoNotOptimize(solve(u, sys));
  }
}
BENCHMARK(BM_Solve)->Arg(8)->Arg(64)->Arg(512);

void BM_SerializeSystem(benchmark::State& state) {
  std::mt19937_64 rng(4);
  Universe u;
  const FlatSystem sys = random_system(rng, u, static_cast<std::size_t>(state.range(0)));
  const Solution sol = solve(u, sys);
  std::vector<SetId> roots;
  for (const Equation& eq : sys.equations) roots.push_back(sol.at(eq.name));
  for (auto _ : state) benchmark::DoNotOptimize(serialize_system(u, roots));
}
BENCHMARK(BM_SerializeSystem)->Arg(8)->Arg(64)->Arg(512);

void BM_CodingCorrespondence(benchmark::State& state) {
  for (auto _ : state) {
    Universe u;
    AckermannCodec codec(u);
    std::vector<SetId> seeds;
    for (std::int64_t n = 0; n <= state.range(0); ++n) seeds.push_back(codec.decode(static_cast<std::uint64_t>(n)));
    const Slice slice = closure(u, seeds);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < slice.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < slice.vertices.size(); ++j) {
        edges += bit_adjacent(codec.code(slice.vertices[i]), codec.code(slice.vertices[j])) ? 1 : 0;
      }
    }
    benchmark::DoNotOptimize(edges);
  }
}
BENCHMARK(BM_CodingCorrespondence)->Arg(64)->Arg(256)->Arg(1000);

void BM_LoopyWitness(benchmark::State& state) {
  Universe u;
  std::vector<SetId> us, vs;
  for (std::int64_t k = 0; k < state.range(0); ++k) {
    us.push_back(u.vn(static_cast<std::uint64_t>(2 * k)));
    vs.push_back(u.vn(static_cast<std::uint64_t>(2 * k + 1)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(arp_witness_loopy(u, us, vs));
}
BENCHMARK(BM_LoopyWitness)->Arg(1)->Arg(4)->Arg(16);

void BM_BitHfGame(benchmark::State& state) {
  for (auto _ : state) {
    Universe u;
    BitOracle bit;
    HereditarilyFiniteOracle hf(u);
    benchmark::DoNotOptimize(back_and_forth(bit, hf, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_BitHfGame)->Arg(4)->Arg(10)->Arg(16);

void BM_LoopyGame(benchmark::State& state) {
  for (auto _ : state) {
    Universe u;
    HypersetOracle left(u, 1), right(u, 2);
    benchmark::DoNotOptimize(back_and_forth(left, right, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_LoopyGame)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
