// OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include "revform/kernels.hpp"

#include <fstream>
#include <json.hpp>

using namespace revform;

namespace {

const Formula& zimin2() {
    static const Formula phi = Formula::parse("x y x z x y x");
    return phi;
}

std::vector<Formula> binary_patterns() {
    std::vector<Formula> out;
    std::ifstream in(REVFORM_DATA_DIR "/binary_patterns.jsonl");
    std::string line;
    while (std::getline(in, line) && out.size() < 120)
        if (!line.empty()) out.push_back(Formula::parse(nlohmann::json::parse(line).at("formula").get<std::string>()));
    return out;
}

void BM_encounter_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(kernels::all_words_encounter(zimin2(), 2, st.range(0)));
}

void BM_encounter_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::all_words_encounter(zimin2(), 2, st.range(0)));
}

void BM_decide_batch_parallel(benchmark::State& st) {
    const auto formulas = binary_patterns();
    for (auto _ : st) benchmark::DoNotOptimize(kernels::decide_batch(formulas));
}

void BM_decide_batch_serial(benchmark::State& st) {
    const auto formulas = binary_patterns();
    for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::decide_batch(formulas));
}

}  // namespace

BENCHMARK(BM_encounter_parallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_encounter_serial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_decide_batch_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_decide_batch_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
