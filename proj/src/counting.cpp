#include "posetcodes/counting.hpp"

#include <algorithm>
#include <numeric>

#include "posetcodes/errors.hpp"
#include "posetcodes/kernels.hpp"

namespace posetcodes {

BoundReport chain_condition_lower_bound(const ChainPartition& partition, std::uint32_t q)
{
    if (q < 2)
        throw RangeError("field order must be at least 2");
    BoundReport report;
    report.q = q;
    report.chain_sizes = partition.chain_sizes();
    report.bound = 0;
    for (int nu : report.chain_sizes) {
        std::vector<BigInt> row;
        for (int j = 1; j <= nu; ++j) {
            row.push_back(gaussian_binomial(nu, j, q));
            report.bound += row.back();
        }
        report.addends.push_back(std::move(row));
    }
    return report;
}

namespace {

template <typename MapFn>
CensusReport run_census(const Poset& p, std::uint32_t q, std::size_t max_dim, std::uint64_t budget,
                        std::string poset_id, MapFn&& map)
{
    const std::size_t n = p.size();
    max_dim = std::min(max_dim, n);
    const FieldPtr field = Field::get(q);

    BigInt planned = 0;
    for (std::size_t d = 1; d <= max_dim; ++d)
        planned += gaussian_binomial(static_cast<long long>(n), static_cast<long long>(d), q);
    if (planned > budget)
        throw BudgetExceeded("census over " + planned.str() + " subspaces exceeds the enumeration budget of " +
                             std::to_string(budget));

    CensusReport report;
    report.q = q;
    report.n = n;
    report.poset_id = std::move(poset_id);
    report.total_codes.assign(max_dim + 1, 0);
    report.chain_condition_codes.assign(max_dim + 1, 0);

    const Subspace full = span(MatrixFq::identity(field, n));
    for (std::size_t d = 1; d <= max_dim; ++d) {
        SubspaceEnumerator subspaces(full, d, budget);
        const std::vector<char> holds = map(subspaces, [&](const Subspace& s) {
            return find_maximal_flag(LinearCode(p, s), SearchOptions{budget, 1}).has_value();
        });
        report.total_codes[d] = subspaces.count();
        report.chain_condition_codes[d] = static_cast<std::uint64_t>(std::count(holds.begin(), holds.end(), 1));
        report.chain_condition_total += report.chain_condition_codes[d];
    }
    return report;
}

} // namespace

CensusReport census(const Poset& p, std::uint32_t q, std::size_t max_dim, const SearchOptions& opts,
                    std::string poset_id)
{
    return run_census(p, q, max_dim, opts.budget, std::move(poset_id), [&](const auto& subspaces, auto&& pred) {
        return kernels::map_subspaces(subspaces, pred, opts.threads);
    });
}

CensusReport census_serial(const Poset& p, std::uint32_t q, std::size_t max_dim, std::uint64_t budget,
                           std::string poset_id)
{
    return run_census(p, q, max_dim, budget, std::move(poset_id), [](const auto& subspaces, auto&& pred) {
        return kernels::map_subspaces_serial(subspaces, pred);
    });
}

} // namespace posetcodes
