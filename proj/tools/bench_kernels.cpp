// serial reference vs OpenMP kernels on representative table builds;
// verifies the two paths agree exactly before reporting timings
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "partmult/engine.hpp"

using namespace partmult;

namespace {

struct Workload {
    std::string name;
    SetDescriptor parts;
    SetDescriptor mults;
    i64 n_max;
};

double run_once(const Workload& w, KernelMode mode, CountTable& out) {
    EngineOptions opts;
    opts.kernel = mode;
    opts.work_ceiling = 1'000'000'000'000LL;
    const auto t0 = std::chrono::steady_clock::now();
    out = count_auto(w.parts, w.mults, w.n_max, opts);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    i64 scale = argc > 1 ? std::atoll(argv[1]) : 200'000;

    const std::vector<Workload> workloads = {
        {"geometric2/odd-mults", SetDescriptor::geometric(2),
         SetDescriptor::not_divisible(2), scale},
        {"geometric3/notdiv3", SetDescriptor::geometric(3),
         SetDescriptor::not_divisible(3), scale},
        {"naturals/odd-mults", SetDescriptor::naturals(),
         SetDescriptor::arithmetic(1, 2), scale / 10},
        {"naturals/naturals", SetDescriptor::naturals(), SetDescriptor::naturals(),
         scale / 10},
        {"finite123/naturals", SetDescriptor::finite({1, 2, 3}),
         SetDescriptor::naturals(), scale},
    };

    std::printf("threads=%d\n", omp_get_max_threads());
    std::printf("%-24s %12s %10s %10s %8s\n", "workload", "n_max", "serial_s", "omp_s",
                "speedup");
    for (const Workload& w : workloads) {
        CountTable serial_table{{}, w.parts, w.mults, 0, EnginePath::generic};
        CountTable omp_table{{}, w.parts, w.mults, 0, EnginePath::generic};
        const double ts = run_once(w, KernelMode::serial, serial_table);
        const double tp = run_once(w, KernelMode::openmp, omp_table);
        if (serial_table.values != omp_table.values) {
            std::printf("MISMATCH on %s\n", w.name.c_str());
            return 1;
        }
        std::printf("%-24s %12lld %10.3f %10.3f %7.2fx\n", w.name.c_str(),
                    static_cast<long long>(w.n_max), ts, tp, ts / tp);
    }
    return 0;
}
