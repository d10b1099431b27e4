#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "posetcodes/codes.hpp"
#include "posetcodes/linalg.hpp"
#include "posetcodes/poset.hpp"

namespace posetcodes {

/// Lower bound on the number of chain-condition codes obtained from a chain
/// partition: every subspace of F_q^{P_i} for a single chain P_i qualifies.
struct BoundReport {
    std::vector<int> chain_sizes;
    std::uint32_t q = 0;
    BigInt bound;
    /// addends[i][j-1] = [nu_i j]_q for j = 1..nu_i.
    std::vector<std::vector<BigInt>> addends;
};

/// sum_i sum_{j=1}^{nu_i} [nu_i j]_q. Throws RangeError for q < 2.
BoundReport chain_condition_lower_bound(const ChainPartition& partition, std::uint32_t q);

struct CensusReport {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::string poset_id;
    /// Index d holds dimension d, for d = 0..max_dim. Dimension 0 is never
    /// enumerated and stays at zero.
    std::vector<std::uint64_t> total_codes;
    std::vector<std::uint64_t> chain_condition_codes;
    std::uint64_t chain_condition_total = 0;
};

/// Runs find_maximal_flag on every nonzero subspace of F_q^n of dimension at
/// most max_dim and tallies the ones satisfying the chain condition. Throws
/// BudgetExceeded when the number of subspaces exceeds opts.budget.
CensusReport census(const Poset& p, std::uint32_t q, std::size_t max_dim, const SearchOptions& opts = {},
                    std::string poset_id = {});

/// Single-threaded reference for census.
CensusReport census_serial(const Poset& p, std::uint32_t q, std::size_t max_dim,
                           std::uint64_t budget = default_enumeration_budget, std::string poset_id = {});

} // namespace posetcodes
