#include <benchmark/benchmark.h>

#include "dnanet/codon.hpp"
#include "dnanet/enzyme.hpp"
#include "dnanet/random.hpp"
#include "dnanet/sequence.hpp"
#include "dnanet/stuffing.hpp"

using namespace dnanet;

namespace {

Sequence random_seq(std::size_t n, std::uint64_t seed = 1) {
    RandomStream rng(seed);
    std::vector<Base> bases(n);
    for (auto& b : bases) b = rng.uniform_base();
    return Sequence(std::move(bases));
}

std::vector<std::uint8_t> bench_bytes(std::size_t n, std::uint64_t seed = 2) {
    RandomStream rng(seed);
    std::vector<std::uint8_t> bytes(n);
    for (auto& b : bytes) b = static_cast<std::uint8_t>(rng.uniform_below(256));
    return bytes;
}

}  // namespace

static void BM_PackBytes(benchmark::State& state) {
    const auto data = bench_bytes(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pack_bytes(data));
    }
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PackBytes)->Range(1 << 10, 1 << 16);

static void BM_UnpackBytes(benchmark::State& state) {
    const Sequence seq = pack_bytes(bench_bytes(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(unpack_bytes(seq));
    }
}
BENCHMARK(BM_UnpackBytes)->Range(1 << 10, 1 << 16);

static void BM_FindSites(benchmark::State& state) {
    const Sequence seq = random_seq(static_cast<std::size_t>(state.range(0)));
    const EnzymeSpec enzyme = EnzymeSpec::ecori();
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_sites(seq, enzyme));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FindSites)->Range(1 << 12, 1 << 18);

static void BM_CutAndReligate(benchmark::State& state) {
    const Sequence seq = random_seq(static_cast<std::size_t>(state.range(0)), 3);
    const EnzymeSpec enzyme = EnzymeSpec::ecori();
    for (auto _ : state) {
        Sequence whole;
        for (const Sequence& fragment : cut(seq, enzyme)) whole.append(fragment);
        benchmark::DoNotOptimize(whole);
    }
}
BENCHMARK(BM_CutAndReligate)->Range(1 << 12, 1 << 16);

static void BM_Translate(benchmark::State& state) {
    Sequence seq = random_seq(static_cast<std::size_t>(state.range(0)) / 3 * 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(translate(seq, CodonTable::standard()));
    }
}
BENCHMARK(BM_Translate)->Range(1 << 10, 1 << 16);

static void BM_StuffDestuff(benchmark::State& state) {
    const Sequence payload = random_seq(static_cast<std::size_t>(state.range(0)), 4);
    const Sequence guard = Sequence::from_string("GAATT");
    for (auto _ : state) {
        benchmark::DoNotOptimize(destuff(stuff(payload, guard), guard));
    }
}
BENCHMARK(BM_StuffDestuff)->Range(1 << 10, 1 << 16);

BENCHMARK_MAIN();
