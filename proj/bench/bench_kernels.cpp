// Serial reference vs OpenMP kernels on length-one algebras, where the pair
// oracle cannot stop early.

#include <benchmark/benchmark.h>

#include "lenalg/generate.hpp"
#include "lenalg/kernels.hpp"

using namespace lenalg;

namespace {

Algebra<FiniteField> sample(const char* field, std::size_t dim, const char* mode) {
  return generate_length_one(FiniteField(FieldSpec::parse(field)), dim, 7, GenMode::parse(mode), true);
}

void oracle(benchmark::State& state, const char* field, std::size_t dim, const char* mode, Exec exec) {
  const auto a = sample(field, dim, mode);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_length_one(a, exec).verdict);
}

void length(benchmark::State& state, const char* field, std::size_t dim, const char* mode, Exec exec) {
  const auto a = sample(field, dim, mode);
  for (auto _ : state) benchmark::DoNotOptimize(length_of_algebra(a, exec).length);
}

}  // namespace

BENCHMARK_CAPTURE(oracle, gf4_dim4_serial, "GF(4)", 4, "typeII", Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(oracle, gf4_dim4_parallel, "GF(4)", 4, "typeII", Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(oracle, gf5_dim4_serial, "GF(5)", 4, "special", Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(oracle, gf5_dim4_parallel, "GF(5)", 4, "special", Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(length, gf2_dim5_serial, "GF(2)", 5, "typeI", Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(length, gf2_dim5_parallel, "GF(2)", 5, "typeI", Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(length, gf3_dim4_serial, "GF(3)", 4, "special", Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(length, gf3_dim4_parallel, "GF(3)", 4, "special", Exec::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
