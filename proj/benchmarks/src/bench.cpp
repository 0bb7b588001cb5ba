// Microbenchmarks for the numeric kernels: Bessel evaluation, Rayleigh
// roots, the boundary-coefficient quadrature, and the secular determinants
// that dominate the spectrum scans.

#include <benchmark/benchmark.h>

#include "elastoweyl/material.hpp"
#include "elastoweyl/numerics/bessel.hpp"
#include "elastoweyl/rayleigh.hpp"
#include "elastoweyl/spectra/cylinder.hpp"
#include "elastoweyl/spectra/disk.hpp"
#include "elastoweyl/weyl.hpp"

namespace {

using namespace elastoweyl;

const Material kDisk(2.0, 1.0, 2);
const Material kCyl(2.0, 1.0, 3);
constexpr double kPi = 3.141592653589793238462643383279502884;

void BM_BesselJ_Oscillatory(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j(10, 320.0));
}
BENCHMARK(BM_BesselJ_Oscillatory);

void BM_BesselJ_Evanescent(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j(100, 50.0));
}
BENCHMARK(BM_BesselJ_Evanescent);

void BM_RayleighRoots(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rayleigh_roots(0.3).w1);
}
BENCHMARK(BM_RayleighRoots);

void BM_WeylB_Quadrature(benchmark::State& state) {
  const Material m = material_from_alpha(0.3, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(weyl_b(m, Boundary::free_boundary));
}
BENCHMARK(BM_WeylB_Quadrature)->Arg(2)->Arg(3)->Arg(6);

void BM_WeylB_ClosedFormOdd(benchmark::State& state) {
  const Material m = material_from_alpha(0.3, 9);
  for (auto _ : state)
    benchmark::DoNotOptimize(weyl_b_odd(m, Boundary::free_boundary));
}
BENCHMARK(BM_WeylB_ClosedFormOdd);

void BM_DiskSecular(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        disk_secular(kDisk, Boundary::free_boundary, 12, 1500.0));
}
BENCHMARK(BM_DiskSecular);

void BM_CylinderSecular(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        cylinder_secular(kCyl, Boundary::free_boundary, kPi, 25.0, 400.0).lamb);
}
BENCHMARK(BM_CylinderSecular);

void BM_DiskSpectrum(benchmark::State& state) {
  DiskScanOptions opt;
  opt.lambda_max = static_cast<double>(state.range(0));
  for (auto _ : state) {
    const CountingFunction cf =
        disk_spectrum(kDisk, Boundary::dirichlet, opt);
    benchmark::DoNotOptimize(cf.total_multiplicity());
  }
}
BENCHMARK(BM_DiskSpectrum)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_CylinderSpectrum(benchmark::State& state) {
  CylinderScanOptions opt;
  opt.lambda_max = static_cast<double>(state.range(0));
  for (auto _ : state) {
    const CountingFunction cf =
        cylinder_spectrum(kCyl, Boundary::free_boundary, kPi, opt);
    benchmark::DoNotOptimize(cf.total_multiplicity());
  }
}
BENCHMARK(BM_CylinderSpectrum)->Arg(100)->Arg(500)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
