// Serial reference vs OpenMP kernels on the sweep workloads.
//
//   bench_sweep [a_max] [jobs]
#include "ratsq/analysis.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const long a_max = argc > 1 ? std::atol(argv[1]) : 20000;
    const int jobs = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();
    std::cout << "a in [1, " << a_max << "], " << jobs << " threads\n";

    std::vector<ratsq::SweepRecord> serial, parallel;
    const double t_serial = time_ms([&] { serial = ratsq::sweep_serial(1, a_max); });
    const double t_parallel = time_ms([&] { parallel = ratsq::sweep(1, a_max, jobs); });
    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i)
        same = serial[i].sigma == parallel[i].sigma && serial[i].min_k == parallel[i].min_k;
    std::cout << "sweep       serial " << t_serial << " ms, parallel " << t_parallel
              << " ms, speedup " << t_serial / t_parallel << (same ? "" : "  MISMATCH") << "\n";

    ratsq::TauGrid gs, gp;
    const double g_serial = time_ms([&] { gs = ratsq::tau_grid_serial(1, 2000, 1, 400); });
    const double g_parallel = time_ms([&] { gp = ratsq::tau_grid(1, 2000, 1, 400, jobs); });
    std::cout << "tau_grid    serial " << g_serial << " ms, parallel " << g_parallel
              << " ms, speedup " << g_serial / g_parallel
              << (gs.values == gp.values ? "" : "  MISMATCH") << "\n";
    return same && gs.values == gp.values ? 0 : 1;
}
