// Times the OpenMP predicate kernels against the serial reference loops on
// representative modules, then the whole suite at one and at max threads.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "finalg/lab.hpp"

using namespace finalg;

namespace {

double best_of_ms(int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        if (ms < best) best = ms;
    }
    return best;
}

// volatile sink so the optimizer cannot drop the classification work
volatile int sink = 0;

void classify_all_serial(const Instance& inst) {
    int acc = 0;
    for (const Submodule& P : inst.submodules) {
        if (!P.proper()) continue;
        acc += serial::is_prime_submodule(P).holds;
        acc += serial::is_classical_prime(P).holds;
        acc += serial::is_semiprime(P).holds;
        acc += serial::is_one_abs_prime(P).holds;
        acc += serial::is_classical_one_abs_prime(P).holds;
        acc += serial::is_classical_two_absorbing(P).holds;
    }
    sink = sink + acc;
}

void classify_all_parallel(const Instance& inst) {
    int acc = 0;
    for (const Submodule& P : inst.submodules) {
        if (!P.proper()) continue;
        acc += is_prime_submodule(P).holds;
        acc += is_classical_prime(P).holds;
        acc += is_semiprime(P).holds;
        acc += is_one_abs_prime(P).holds;
        acc += is_classical_one_abs_prime(P).holds;
        acc += is_classical_two_absorbing(P).holds;
    }
    sink = sink + acc;
}

}  // namespace

int main(int argc, char** argv) {
    int reps = 5;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--reps") == 0 && i + 1 < argc) reps = std::atoi(argv[i + 1]);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("predicate kernels, serial reference vs OpenMP (%d thread%s), best of %d\n\n",
                threads, threads == 1 ? "" : "s", reps);

    Corpus corpus = generate_corpus({});
    std::printf("%-28s %5s %6s %12s %12s %8s\n", "module", "|M|", "subs", "serial ms",
                "parallel ms", "speedup");
    for (const char* label : {"Z12", "Z4xZ4", "dup(Z8,(2))", "Z2(+)Z3(+)Z12 over Z12"}) {
        const Instance* inst = nullptr;
        for (const Instance& i : corpus.instances)
            if (i.label == label) inst = &i;
        if (!inst) continue;
        double s = best_of_ms(reps, [&] { classify_all_serial(*inst); });
        double p = best_of_ms(reps, [&] { classify_all_parallel(*inst); });
        std::printf("%-28s %5d %6zu %12.3f %12.3f %7.2fx\n", label, inst->module->size(),
                    inst->submodules.size(), s, p, s / p);
    }

    std::printf("\nfull suite (25 checkers, default corpus)\n");
#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    double one = best_of_ms(reps, [&] { sink = sink + run_suite(corpus).total_failures(); });
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    double many = best_of_ms(reps, [&] { sink = sink + run_suite(corpus).total_failures(); });
    std::printf("%-28s %12.1f ms\n", "1 thread", one);
    std::printf("%-19s %6d %12.1f ms (%.2fx)\n", "threads =", threads, many, one / many);
    return 0;
}
