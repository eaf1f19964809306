#include <benchmark/benchmark.h>

#include "dnanet/random.hpp"
#include "dnanet/stack.hpp"

using namespace dnanet;
using namespace dnanet::stack;

namespace {

std::vector<std::uint8_t> payload_of(std::size_t n) {
    RandomStream rng(7);
    std::vector<std::uint8_t> bytes(n);
    for (auto& b : bytes) b = static_cast<std::uint8_t>(rng.uniform_below(256));
    return bytes;
}

StackConfig config(EccMode mode) {
    StackConfig cfg;
    cfg.ecc = mode;
    return cfg;
}

}  // namespace

static void BM_EncodeMessage(benchmark::State& state) {
    const auto payload = payload_of(static_cast<std::size_t>(state.range(0)));
    const StackConfig cfg = config(state.range(1) ? EccMode::triple : EccMode::none);
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode_message(payload, cfg));
    }
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EncodeMessage)->Args({4096, 0})->Args({4096, 1})->Args({65536, 1});

static void BM_DecodeMessage(benchmark::State& state) {
    const auto payload = payload_of(static_cast<std::size_t>(state.range(0)));
    const StackConfig cfg = config(state.range(1) ? EccMode::triple : EccMode::none);
    const auto frames = encode_message(payload, cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode_message(frames, cfg));
    }
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DecodeMessage)->Args({4096, 0})->Args({4096, 1})->Args({65536, 1});

static void BM_EccDecodeTriple(benchmark::State& state) {
    RandomStream rng(8);
    std::vector<Base> bases(static_cast<std::size_t>(state.range(0)));
    for (auto& b : bases) b = rng.uniform_base();
    const Sequence body = ecc_encode(Sequence(std::move(bases)), EccMode::triple);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecc_decode(body, EccMode::triple));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EccDecodeTriple)->Range(1 << 10, 1 << 18);

static void BM_Checksum8(benchmark::State& state) {
    RandomStream rng(9);
    std::vector<Base> bases(static_cast<std::size_t>(state.range(0)));
    for (auto& b : bases) b = rng.uniform_base();
    const Sequence seq{std::move(bases)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(checksum8(seq));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Checksum8)->Range(1 << 10, 1 << 18);
