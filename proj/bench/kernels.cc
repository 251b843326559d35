// Serial reference versus parallel kernels.
#include <benchmark/benchmark.h>

#include <random>

#include "nfacomp/algorithms.hh"
#include "nfacomp/gate.hh"
#include "nfacomp/generators.hh"
#include "nfacomp/oracle.hh"
#include "nfacomp/powerset.hh"
#include "nfacomp/reduction.hh"

using namespace nfacomp;

namespace {

PortNfa simulation_input(std::size_t n) {
    std::mt19937_64 rng(n);
    RandomNfaOptions o;
    o.min_states = o.max_states = n;
    o.min_symbols = o.max_symbols = 2;
    o.density = 3.0 / static_cast<double>(n);
    return PortNfa::from_nfa(random_nfa(rng, o));
}

void simulation_pairwise(benchmark::State& st) {
    const PortNfa a = simulation_input(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) { benchmark::DoNotOptimize(compute_simulation_serial(a)); }
}

void simulation_serial(benchmark::State& st) {
    const PortNfa a = simulation_input(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) { benchmark::DoNotOptimize(compute_simulation(a, Execution::Serial)); }
}

void simulation_parallel(benchmark::State& st) {
    const PortNfa a = simulation_input(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) { benchmark::DoNotOptimize(compute_simulation(a, Execution::Parallel)); }
}

void oracle(benchmark::State& st, Execution exec) {
    const Nfa a = reverse_friendly(4);
    const Nfa c = reverse_complement(a);
    const std::size_t len = static_cast<std::size_t>(st.range(0));
    for (auto _ : st) { benchmark::DoNotOptimize(oracle_complement_check(a, c, len, exec)); }
}

void oracle_serial(benchmark::State& st) { oracle(st, Execution::Serial); }
void oracle_parallel(benchmark::State& st) { oracle(st, Execution::Parallel); }

/// Gate automaton with a nondeterministic rear, so that many cuts are checked.
PortNfa gate_input(std::size_t n) {
    const Nfa g = gate_family(n);
    return PortNfa::from_nfa(unite(g, reverse(g)));
}

void gate_search(benchmark::State& st, Execution exec) {
    const PortNfa a = gate_input(static_cast<std::size_t>(st.range(0)));
    GateSearchOptions o;
    o.execution = exec;
    for (auto _ : st) { benchmark::DoNotOptimize(find_gate_partitions(a, o)); }
}

void gate_serial(benchmark::State& st) { gate_search(st, Execution::Serial); }
void gate_parallel(benchmark::State& st) { gate_search(st, Execution::Parallel); }

} // namespace

BENCHMARK(simulation_pairwise)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(simulation_serial)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(simulation_parallel)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(oracle_serial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(oracle_parallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(gate_serial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(gate_parallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
