// Micro-benchmark: parallel vs serial float-mode kernel convolution.
//
//   bench_kernel [n]   (default n = 300)

#include "triwalk/kernel.hpp"
#include "triwalk/walk_model.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace triwalk;

namespace {
double run(const StepDistribution& p, int n, bool parallel) {
    KernelTable t = KernelTable::delta(p, KernelMode::Float);
    auto t0 = std::chrono::steady_clock::now();
    if (parallel)
        t.evolve(n);
    else
        t.evolve_serial(n);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}
}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 300;
    StepDistribution p = StepDistribution::validate(
        Rational(1, 4), Rational(1, 12), Rational(1, 3), Rational(1, 6), Rational(1, 6),
        Rational(0));

    double ts = run(p, n, false);
    double tp = run(p, n, true);
    std::cout << "n = " << n << "\n"
              << "serial evolve:   " << ts << " s\n"
              << "parallel evolve: " << tp << " s\n"
              << "speedup:         " << ts / tp << "x\n";
    return 0;
}
