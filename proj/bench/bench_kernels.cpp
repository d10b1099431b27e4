// Serial reference vs OpenMP kernels on hierarchy and census workloads.
//
//   bench_kernels [threads] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "posetcodes/codes.hpp"
#include "posetcodes/counting.hpp"
#include "posetcodes/kernels.hpp"
#include "posetcodes/verify.hpp"

namespace pc = posetcodes;

namespace {

double seconds(const std::function<void()>& fn, int repeats)
{
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i)
        fn();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count() / repeats;
}

void report(const char* name, double serial, double parallel)
{
    std::printf("%-34s serial %9.4f s   parallel %9.4f s   speedup %5.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv)
{
    const int threads = argc > 1 ? std::atoi(argv[1]) : 0;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    std::printf("threads: %d\n", pc::kernels::resolve_threads(threads));

    // Random [16, 8] binary code under a weak order.
    pc::verify::Rng rng(2024);
    const auto field = pc::Field::get(2);
    std::vector<pc::VectorFq> rows;
    for (int i = 0; i < 8; ++i) {
        pc::VectorFq v(field, 16);
        for (std::size_t j = 0; j < 16; ++j)
            v[j] = static_cast<pc::Element>(rng() & 1U);
        rows.push_back(v);
    }
    const pc::LinearCode code(pc::Poset::weak_order({4, 4, 4, 4}), pc::span(field, 16, rows));

    pc::WeightHierarchy a, b;
    const double hs = seconds([&] { a = pc::weight_hierarchy_serial(code); }, repeats);
    const double hp = seconds([&] { b = pc::weight_hierarchy(code, {pc::default_enumeration_budget, threads}); },
                              repeats);
    report("weight_hierarchy [16,8]_2", hs, hp);
    if (!(a == b)) {
        std::printf("MISMATCH between serial and parallel hierarchy\n");
        return 1;
    }

    const auto poset = pc::Poset::weak_order({2, 2, 2});
    pc::CensusReport cs, cp;
    const double s1 = seconds([&] { cs = pc::census_serial(poset, 2, 6); }, repeats);
    const double s2 = seconds([&] { cp = pc::census(poset, 2, 6, {pc::default_enumeration_budget, threads}); },
                              repeats);
    report("census weak_order(2,2,2), q=2", s1, s2);
    if (cs.chain_condition_total != cp.chain_condition_total) {
        std::printf("MISMATCH between serial and parallel census\n");
        return 1;
    }
    return 0;
}
