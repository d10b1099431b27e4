#include "posetcodes/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "posetcodes/errors.hpp"

namespace posetcodes {

std::vector<int> ChainPartition::chain_sizes() const
{
    std::vector<int> sizes;
    sizes.reserve(chains.size());
    for (const auto& c : chains)
        sizes.push_back(static_cast<int>(c.size()));
    return sizes;
}

Poset::Poset(std::vector<IdealSet> down) : n_(down.size()), down_(std::move(down)) {}

Poset Poset::from_cover_relations(std::size_t n, const std::vector<std::pair<int, int>>& covers)
{
    if (n == 0)
        throw EmptyInput("poset must have at least one element");
    std::vector<IdealSet> down(n, IdealSet(n));
    for (std::size_t j = 0; j < n; ++j)
        down[j].insert(static_cast<int>(j + 1));

    const auto in_range = [n](int e) { return e >= 1 && static_cast<std::size_t>(e) <= n; };
    for (auto [a, b] : covers) {
        if (!in_range(a) || !in_range(b))
            throw RangeError("cover (" + std::to_string(a) + "," + std::to_string(b) +
                             ") outside {1,...," + std::to_string(n) + "}");
        if (a == b)
            throw RangeError("cover (" + std::to_string(a) + "," + std::to_string(b) + ") is reflexive");
        down[static_cast<std::size_t>(b - 1)].insert(a);
    }

    // Warshall closure on down-set rows.
    for (std::size_t k = 0; k < n; ++k) {
        const IdealSet via = down[k];
        for (std::size_t j = 0; j < n; ++j)
            if (down[j].contains(static_cast<int>(k + 1)))
                down[j] |= via;
    }

    for (std::size_t j = 0; j < n; ++j)
        for (int i : down[j].elements())
            if (static_cast<std::size_t>(i) != j + 1 && down[static_cast<std::size_t>(i - 1)].contains(static_cast<int>(j + 1)))
                throw CycleError("cover relations force " + std::to_string(i) + " <= " + std::to_string(j + 1) +
                                 " <= " + std::to_string(i));
    return Poset(std::move(down));
}

Poset Poset::weak_order(const std::vector<std::size_t>& block_sizes)
{
    if (block_sizes.empty())
        throw EmptyInput("weak order needs at least one block");
    const std::size_t n = std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
    if (std::find(block_sizes.begin(), block_sizes.end(), 0) != block_sizes.end())
        throw RangeError("weak order block sizes must be positive");

    std::vector<IdealSet> down(n, IdealSet(n));
    IdealSet below(n);
    std::size_t next = 0;
    for (std::size_t size : block_sizes) {
        for (std::size_t t = 0; t < size; ++t) {
            down[next + t] = below;
            down[next + t].insert(static_cast<int>(next + t + 1));
        }
        for (std::size_t t = 0; t < size; ++t)
            below.insert(static_cast<int>(next + t + 1));
        next += size;
    }
    return Poset(std::move(down));
}

Poset Poset::disjoint_chains(std::size_t chain_length, std::size_t num_chains)
{
    if (chain_length == 0 || num_chains == 0)
        throw RangeError("disjoint chains need positive length and count");
    const std::size_t n = chain_length * num_chains;
    std::vector<IdealSet> down(n, IdealSet(n));
    for (std::size_t c = 0; c < num_chains; ++c) {
        IdealSet below(n);
        for (std::size_t t = 0; t < chain_length; ++t) {
            const int label = static_cast<int>(c * chain_length + t + 1);
            below.insert(label);
            down[static_cast<std::size_t>(label - 1)] = below;
        }
    }
    return Poset(std::move(down));
}

bool Poset::leq(int i, int j) const
{
    return down_set(j).contains(i);
}

const IdealSet& Poset::down_set(int j) const
{
    if (j < 1 || static_cast<std::size_t>(j) > n_)
        throw RangeError("element " + std::to_string(j) + " outside {1,...," + std::to_string(n_) + "}");
    return down_[static_cast<std::size_t>(j - 1)];
}

IdealSet Poset::ideal(const ElementSet& generators) const
{
    IdealSet out(n_);
    for (int g : generators.elements())
        out |= down_set(g);
    return out;
}

bool Poset::is_ideal(const ElementSet& s) const
{
    for (int j : s.elements())
        if (!down_set(j).is_subset_of(s))
            return false;
    return true;
}

bool Poset::is_total_on(const ElementSet& subset) const
{
    const auto elems = subset.elements();
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = a + 1; b < elems.size(); ++b)
            if (!comparable(elems[a], elems[b]))
                return false;
    return true;
}

std::vector<int> Poset::sorted_chain(const ElementSet& subset) const
{
    auto elems = subset.elements();
    // In a chain, the rank of x is |down(x) ∩ subset|; sort by it.
    std::sort(elems.begin(), elems.end(), [&](int a, int b) {
        return (down_set(a) & subset).size() < (down_set(b) & subset).size();
    });
    return elems;
}

namespace {

bool augment(const Poset& p, int u, std::vector<int>& match_right, std::vector<char>& visited)
{
    const int n = static_cast<int>(p.size());
    for (int v = 1; v <= n; ++v) {
        if (!p.less(u, v) || visited[static_cast<std::size_t>(v)])
            continue;
        visited[static_cast<std::size_t>(v)] = 1;
        const int owner = match_right[static_cast<std::size_t>(v)];
        if (owner == 0 || augment(p, owner, match_right, visited)) {
            match_right[static_cast<std::size_t>(v)] = u;
            return true;
        }
    }
    return false;
}

} // namespace

WidthResult width_and_min_chain_partition(const Poset& p)
{
    const int n = static_cast<int>(p.size());
    std::vector<int> match_right(static_cast<std::size_t>(n) + 1, 0);
    std::size_t matched = 0;
    for (int u = 1; u <= n; ++u) {
        std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
        if (augment(p, u, match_right, visited))
            ++matched;
    }

    std::vector<int> successor(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v)
        if (int u = match_right[static_cast<std::size_t>(v)]; u != 0)
            successor[static_cast<std::size_t>(u)] = v;

    WidthResult result;
    for (int start = 1; start <= n; ++start) {
        if (match_right[static_cast<std::size_t>(start)] != 0)
            continue;
        std::vector<int> chain;
        for (int x = start; x != 0; x = successor[static_cast<std::size_t>(x)])
            chain.push_back(x);
        result.partition.chains.push_back(std::move(chain));
    }
    result.width = static_cast<std::size_t>(n) - matched;
    return result;
}

void validate_chain_partition(const Poset& p, const ChainPartition& partition)
{
    ElementSet seen(p.size());
    for (const auto& chain : partition.chains) {
        if (chain.empty())
            throw PreconditionViolated("partition contains an empty chain");
        ElementSet members(p.size());
        for (int e : chain) {
            if (e < 1 || static_cast<std::size_t>(e) > p.size())
                throw PreconditionViolated("partition element " + std::to_string(e) + " outside the poset");
            if (seen.contains(e))
                throw PreconditionViolated("partition repeats element " + std::to_string(e));
            seen.insert(e);
            members.insert(e);
        }
        if (!p.is_total_on(members))
            throw PreconditionViolated("partition block is not a chain");
    }
    if (seen.size() != p.size())
        throw PreconditionViolated("partition does not cover the ground set");
}

} // namespace posetcodes
