#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "posetcodes/counting.hpp"
#include "posetcodes/errors.hpp"

using namespace posetcodes;

namespace {

BigInt sum_addends(const BoundReport& r)
{
    BigInt total = 0;
    for (const auto& row : r.addends)
        for (const auto& a : row)
            total += a;
    return total;
}

} // namespace

TEST_CASE("chain-condition lower bound")
{
    const auto chain3 = width_and_min_chain_partition(Poset::chain(3)).partition;
    CHECK(chain_condition_lower_bound(chain3, 2).bound == 15);  // 7 + 7 + 1

    CHECK(chain_condition_lower_bound(ChainPartition{{{1}}}, 2).bound == 1);
    CHECK(chain_condition_lower_bound(ChainPartition{{{1, 2}, {3, 4}}}, 2).bound == 8);

    const auto weak = width_and_min_chain_partition(Poset::weak_order({3, 3})).partition;
    CHECK(weak.chain_sizes() == std::vector<int>{2, 2, 2});
    const auto r = chain_condition_lower_bound(weak, 2);
    CHECK(r.bound == 12);
    CHECK(r.chain_sizes == std::vector<int>{2, 2, 2});
    REQUIRE(r.addends.size() == 3);
    CHECK(r.addends[0] == std::vector<BigInt>{3, 1});

    CHECK_THROWS_AS(chain_condition_lower_bound(chain3, 1), RangeError);
}

TEST_CASE("property: bound addends are gaussian binomials summing to the bound")
{
    for (std::uint32_t q : {2U, 3U, 4U, 5U})
        for (int a = 1; a <= 6; ++a)
            for (int b = 1; b <= 4; ++b) {
                ChainPartition part;
                int label = 1;
                for (int len : {a, b}) {
                    std::vector<int> chain(static_cast<std::size_t>(len));
                    std::iota(chain.begin(), chain.end(), label);
                    label += len;
                    part.chains.push_back(chain);
                }
                const auto r = chain_condition_lower_bound(part, q);
                CHECK(sum_addends(r) == r.bound);
                for (std::size_t i = 0; i < r.addends.size(); ++i)
                    for (std::size_t j = 1; j <= r.addends[i].size(); ++j)
                        CHECK(r.addends[i][j - 1] ==
                              oracle::gaussian_binomial_product(static_cast<unsigned>(r.chain_sizes[i]),
                                                                static_cast<unsigned>(j), q));
            }
}

TEST_CASE("census of small posets")
{
    SUBCASE("every code under a chain satisfies the condition")
    {
        const auto r = census(Poset::chain(3), 2, 3);
        CHECK(r.total_codes == std::vector<std::uint64_t>{0, 7, 7, 1});
        CHECK(r.chain_condition_codes == r.total_codes);
        CHECK(r.chain_condition_total == 15);
    }
    SUBCASE("antichain of two points")
    {
        const auto r = census(Poset::antichain(2), 2, 2);
        CHECK(r.total_codes == std::vector<std::uint64_t>{0, 3, 1});
        CHECK(r.chain_condition_total == 4);
    }
    SUBCASE("max_dim zero")
    {
        const auto r = census(Poset::chain(3), 2, 0);
        CHECK(r.total_codes == std::vector<std::uint64_t>{0});
        CHECK(r.chain_condition_total == 0);
    }
    SUBCASE("budget")
    {
        CHECK_THROWS_AS(census(Poset::chain(4), 2, 4, SearchOptions{20, 0}), BudgetExceeded);
    }
}

TEST_CASE("property: census is at least the bound and matches the serial census")
{
    const std::vector<Poset> posets = {Poset::chain(3),          Poset::antichain(3),      Poset::weak_order({2, 2}),
                                       Poset::weak_order({1, 2}), Poset::disjoint_chains(2, 2),
                                       Poset::from_cover_relations(4, {{1, 3}, {2, 3}, {2, 4}})};
    for (const auto& p : posets)
        for (std::uint32_t q : {2U, 3U}) {
            if (q == 3 && p.size() > 3)
                continue;
            const auto part = width_and_min_chain_partition(p).partition;
            const auto bound = chain_condition_lower_bound(part, q);
            const auto r = census(p, q, p.size());
            CHECK(BigInt(r.chain_condition_total) >= bound.bound);
            CHECK(r.total_codes == census_serial(p, q, p.size()).total_codes);
            CHECK(r.chain_condition_codes == census_serial(p, q, p.size()).chain_condition_codes);
            for (std::size_t d = 1; d < r.total_codes.size(); ++d)
                CHECK(BigInt(r.total_codes[d]) == gaussian_binomial(static_cast<long long>(p.size()),
                                                                    static_cast<long long>(d), q));
        }
}
