#include "posetcodes/kernels.hpp"

#include <algorithm>
#include <limits>

#include "posetcodes/codes.hpp"

namespace posetcodes::kernels {

LevelScan scan_level_serial(const Poset& p, const SubspaceEnumerator& subspaces, bool collect)
{
    LevelScan scan;
    scan.min_weight = std::numeric_limits<std::size_t>::max();
    subspaces.for_each([&](std::uint64_t index, const Subspace& d) {
        const std::size_t w = generalized_weight(p, d);
        if (w < scan.min_weight) {
            scan.min_weight = w;
            scan.achievers.clear();
        }
        if (collect && w == scan.min_weight)
            scan.achievers.push_back(index);
        return true;
    });
    return scan;
}

LevelScan scan_level(const Poset& p, const SubspaceEnumerator& subspaces, bool collect, int threads)
{
    const auto total = static_cast<std::int64_t>(subspaces.count());
    const int nthreads = resolve_threads(threads);
    std::vector<LevelScan> partial(static_cast<std::size_t>(nthreads));

#pragma omp parallel num_threads(nthreads)
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        LevelScan& local = partial[static_cast<std::size_t>(tid)];
        local.min_weight = std::numeric_limits<std::size_t>::max();
        // Static schedule: each thread sees its indices in ascending order,
        // so local achiever lists are sorted.
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < total; ++i) {
            const auto index = static_cast<std::uint64_t>(i);
            const std::size_t w = generalized_weight(p, subspaces.at(index));
            if (w < local.min_weight) {
                local.min_weight = w;
                local.achievers.clear();
            }
            if (collect && w == local.min_weight)
                local.achievers.push_back(index);
        }
    }

    LevelScan merged;
    merged.min_weight = std::numeric_limits<std::size_t>::max();
    for (const auto& local : partial)
        merged.min_weight = std::min(merged.min_weight, local.min_weight);
    if (collect) {
        for (const auto& local : partial)
            if (local.min_weight == merged.min_weight)
                merged.achievers.insert(merged.achievers.end(), local.achievers.begin(), local.achievers.end());
        std::sort(merged.achievers.begin(), merged.achievers.end());
    }
    return merged;
}

} // namespace posetcodes::kernels
