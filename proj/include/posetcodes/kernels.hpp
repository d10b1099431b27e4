#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "posetcodes/linalg.hpp"
#include "posetcodes/poset.hpp"

// Data-parallel scans over subspace enumerations. Each kernel has an OpenMP
// version and a serial reference that tests hold it to.
namespace posetcodes::kernels {

/// Worker count for a `threads` knob; <= 0 selects the OpenMP default.
inline int resolve_threads(int threads)
{
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

struct LevelScan {
    std::size_t min_weight = 0;
    std::vector<std::uint64_t> achievers;  // enumeration indices, ascending
};

/// Minimum generalized weight over every subspace the enumerator yields, plus
/// the indices attaining it when `collect` is set. Requires count() > 0.
LevelScan scan_level(const Poset& p, const SubspaceEnumerator& subspaces, bool collect, int threads);
LevelScan scan_level_serial(const Poset& p, const SubspaceEnumerator& subspaces, bool collect);

/// out[i] = predicate(subspaces.at(i)) for every index.
template <typename Predicate>
std::vector<char> map_subspaces_serial(const SubspaceEnumerator& subspaces, Predicate&& predicate)
{
    std::vector<char> out(subspaces.count(), 0);
    for (std::uint64_t i = 0; i < subspaces.count(); ++i)
        out[i] = predicate(subspaces.at(i)) ? 1 : 0;
    return out;
}

/// Parallel map_subspaces_serial. The predicate must be safe to call
/// concurrently. If any call throws, the exception from the lowest index is
/// rethrown after the loop.
template <typename Predicate>
std::vector<char> map_subspaces(const SubspaceEnumerator& subspaces, Predicate&& predicate, int threads)
{
    const auto total = static_cast<std::int64_t>(subspaces.count());
    std::vector<char> out(static_cast<std::size_t>(total), 0);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(total));
    const int nthreads = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 8) num_threads(nthreads)
    for (std::int64_t i = 0; i < total; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = predicate(subspaces.at(static_cast<std::uint64_t>(i))) ? 1 : 0;
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace posetcodes::kernels
