#include <benchmark/benchmark.h>

#include "dnanet/ledger.hpp"
#include "dnanet/random.hpp"

using namespace dnanet;
using namespace dnanet::ledger;

namespace {

Sequence payload_nt(std::size_t bytes, std::uint64_t seed = 11) {
    RandomStream rng(seed);
    std::vector<std::uint8_t> data(bytes);
    for (auto& b : data) b = static_cast<std::uint8_t>(rng.uniform_below(256));
    return pack_bytes(data);
}

DnaChain sample_chain(std::size_t blocks, std::size_t difficulty) {
    DnaChain chain = genesis_chain(payload_nt(32, 100), difficulty);
    for (std::size_t i = 1; i < blocks; ++i) {
        chain = extend(chain, payload_nt(32, 100 + i));
    }
    return chain;
}

}  // namespace

static void BM_Digest(benchmark::State& state) {
    DnaBlock block;
    block.prev_digest = Sequence(std::vector<Base>(64, Base::A));
    block.payload = payload_nt(static_cast<std::size_t>(state.range(0)));
    block.payload_len = static_cast<std::uint16_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(digest(block));
    }
}
BENCHMARK(BM_Digest)->Arg(32)->Arg(256)->Arg(4096);

static void BM_Mine(benchmark::State& state) {
    const std::size_t difficulty = static_cast<std::size_t>(state.range(0));
    const Sequence prev(std::vector<Base>(64, Base::A));
    std::uint64_t salt = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mine(1, prev, payload_nt(32, ++salt), difficulty));
    }
}
BENCHMARK(BM_Mine)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

static void BM_ValidateChain(benchmark::State& state) {
    const DnaChain chain = sample_chain(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(validate_chain(chain));
    }
}
BENCHMARK(BM_ValidateChain)->Arg(4)->Arg(16);

static void BM_Replicate(benchmark::State& state) {
    const DnaChain chain = sample_chain(8, 1);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(replicate(chain, 0.001, ++seed));
    }
}
BENCHMARK(BM_Replicate);
