#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "posetcodes/element_set.hpp"

namespace posetcodes {

/// Ideal (down-set) of a poset.
using IdealSet = ElementSet;

/// Disjoint chains covering the ground set. Each chain is listed in increasing
/// order under the poset relation.
struct ChainPartition {
    std::vector<std::vector<int>> chains;

    std::size_t size() const noexcept { return chains.size(); }
    std::vector<int> chain_sizes() const;
};

/// Finite partial order on {1,...,n}, stored as its transitive closure.
/// Immutable after construction.
class Poset {
public:
    /// Reflexive-transitive closure of `covers`. Each pair (a,b) means a < b.
    /// Throws RangeError for out-of-range or reflexive pairs and CycleError when
    /// the closure violates antisymmetry.
    static Poset from_cover_relations(std::size_t n, const std::vector<std::pair<int, int>>& covers);

    /// Ordinal sum of antichains with the given sizes, labelled consecutively
    /// block by block. Throws EmptyInput for no blocks.
    static Poset weak_order(const std::vector<std::size_t>& block_sizes);

    /// `num_chains` disjoint chains of `chain_length` elements; chain j holds
    /// labels (j-1)*chain_length+1 ... j*chain_length in increasing order.
    static Poset disjoint_chains(std::size_t chain_length, std::size_t num_chains);

    static Poset chain(std::size_t n) { return disjoint_chains(n, 1); }
    static Poset antichain(std::size_t n) { return disjoint_chains(1, n); }

    std::size_t size() const noexcept { return n_; }

    /// i <=_P j, 1-based.
    bool leq(int i, int j) const;
    bool less(int i, int j) const { return i != j && leq(i, j); }
    bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

    /// Down-set {i : i <= j}.
    const IdealSet& down_set(int j) const;

    /// Smallest ideal containing `generators`. Empty generators give the empty
    /// ideal. Throws RangeError if a generator is outside the ground set.
    IdealSet ideal(const ElementSet& generators) const;

    bool is_ideal(const ElementSet& s) const;

    /// True iff every pair in `subset` is comparable.
    bool is_total_on(const ElementSet& subset) const;

    /// Elements of a totally ordered subset sorted bottom to top.
    std::vector<int> sorted_chain(const ElementSet& subset) const;

    friend bool operator==(const Poset& a, const Poset& b) { return a.down_ == b.down_; }

private:
    explicit Poset(std::vector<IdealSet> down);

    std::size_t n_ = 0;
    std::vector<IdealSet> down_;
};

/// Width of the poset together with a minimum chain partition, obtained from a
/// maximum matching in the strict-comparability bipartite graph. Augmenting
/// paths are explored from the smallest label, trying successors in increasing
/// label order, so the partition is reproducible. Chains are reported sorted by
/// their minimum element.
struct WidthResult {
    std::size_t width = 0;
    ChainPartition partition;
};

WidthResult width_and_min_chain_partition(const Poset& p);

/// Checks that `partition` covers the ground set with disjoint chains of `p`.
/// Throws PreconditionViolated describing the first problem found.
void validate_chain_partition(const Poset& p, const ChainPartition& partition);

} // namespace posetcodes
