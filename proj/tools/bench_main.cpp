#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "csum/operators.hpp"

// Times the serial reference kernels against the OpenMP versions on large
// random matrices over both built-in groups.

namespace {

using csum::DenseMatrix;
using csum::Group;

DenseMatrix random_matrix(const Group& g, int m, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(
        g.finite() ? 0 : -1000000, g.finite() ? g.modulus() - 1 : 1000000);
    DenseMatrix a(g, m, n);
    for (auto& v : a.data())
        v = dist(rng);
    return a;
}

template <class F>
double time_ms(F&& f, int reps) {
    // warm-up
    f();
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r)
        f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void bench_group(const Group& g, int m, int n, int reps) {
    DenseMatrix a = random_matrix(g, m, n, 42);
    struct Row {
        const char* name;
        DenseMatrix (*serial)(const DenseMatrix&);
        DenseMatrix (*parallel)(const DenseMatrix&);
    };
    const Row rows[] = {
        {"collapse_balanced", csum::serial::collapse_balanced, csum::collapse_balanced},
        {"collapse", csum::serial::collapse, csum::collapse},
        {"checkerboard", csum::serial::checkerboard, csum::checkerboard},
        {"plus_construction", csum::serial::plus_construction, csum::plus_construction},
        {"canonicalize", csum::serial::canonicalize, csum::canonicalize},
    };
    std::printf("%s, %dx%d, %d reps\n", g.spec_string().c_str(), m, n, reps);
    for (const Row& r : rows) {
        if (!(r.serial(a) == r.parallel(a))) {
            std::printf("  %-18s MISMATCH\n", r.name);
            continue;
        }
        double ts = time_ms([&] { r.serial(a); }, reps);
        double tp = time_ms([&] { r.parallel(a); }, reps);
        std::printf("  %-18s serial %8.2f ms   omp %8.2f ms   speedup %.2fx\n", r.name,
                    ts, tp, ts / tp);
    }
}

} // namespace

int main(int argc, char** argv) {
    int m = argc > 1 ? std::atoi(argv[1]) : 4000;
    int n = argc > 2 ? std::atoi(argv[2]) : 4000;
    int reps = argc > 3 ? std::atoi(argv[3]) : 5;
    std::printf("threads: %d\n", omp_get_max_threads());
    bench_group(Group::integers(), m, n, reps);
    bench_group(Group::mod(5), m, n, reps);
    return 0;
}
