#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "relquiv/generator.hpp"
#include "relquiv/oracle.hpp"

using namespace relquiv;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    int vertices = argc > 1 ? std::atoi(argv[1]) : 16;
    int count = argc > 2 ? std::atoi(argv[2]) : 32;
    std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 2024;

    Rng rng(seed);
    std::vector<StringPresentation> ps;
    for (int i = 0; i < count; ++i) {
        GeneratorOptions opt;
        opt.n_vertices = vertices;
        opt.density = 0.35 + 0.3 * rng.unit();
        ps.push_back(random_string_tree(rng, opt));
    }

    std::vector<std::unique_ptr<ExtEngine>> engines;
    std::vector<std::unique_ptr<Oracle>> oracles;
    for (const StringPresentation& P : ps) {
        engines.push_back(std::make_unique<ExtEngine>(P));
        oracles.push_back(std::make_unique<Oracle>(*engines.back()));
    }

    auto t0 = std::chrono::steady_clock::now();
    std::vector<ArrowMultiset> serial;
    for (const auto& o : oracles) serial.push_back(o->new_arrow_multiset(false));
    double serial_ms = ms_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    std::vector<ArrowMultiset> parallel;
    for (const auto& o : oracles) parallel.push_back(o->new_arrow_multiset(true));
    double parallel_ms = ms_since(t1);

    bool agree = serial == parallel;

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::cout << "instances: " << count << ", vertices: " << vertices
              << ", threads: " << threads << "\n";
    std::cout << "serial reference: " << serial_ms << " ms\n";
    std::cout << "parallel kernel:  " << parallel_ms << " ms";
    if (parallel_ms > 0) std::cout << "  (speedup " << serial_ms / parallel_ms << "x)";
    std::cout << "\n" << (agree ? "results agree" : "RESULTS DIFFER") << "\n";
    return agree ? 0 : 1;
}
