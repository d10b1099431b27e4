#include <doctest.h>

#include <stdexcept>

#include "posetcodes/codes.hpp"
#include "posetcodes/counting.hpp"
#include "posetcodes/kernels.hpp"
#include "posetcodes/verify.hpp"

using namespace posetcodes;

TEST_CASE("resolve_threads")
{
    CHECK(kernels::resolve_threads(3) == 3);
    CHECK(kernels::resolve_threads(0) >= 1);
    CHECK(kernels::resolve_threads(-1) >= 1);
}

TEST_CASE("property: parallel level scan equals the serial scan")
{
    verify::Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint32_t q = trial % 2 ? 3 : 2;
        const auto inst = verify::random_instance(rng, q, 9);
        for (std::size_t r = 1; r <= inst.code.dim(); ++r) {
            const SubspaceEnumerator e(inst.code, r);
            const auto serial = kernels::scan_level_serial(inst.poset, e, true);
            for (int threads : {1, 2, 4}) {
                const auto par = kernels::scan_level(inst.poset, e, true, threads);
                CHECK(par.min_weight == serial.min_weight);
                CHECK(par.achievers == serial.achievers);
                CHECK(kernels::scan_level(inst.poset, e, false, threads).min_weight == serial.min_weight);
            }
        }
        const LinearCode c(inst.poset, inst.code);
        for (int threads : {1, 2, 4})
            CHECK(weight_hierarchy(c, SearchOptions{default_enumeration_budget, threads}) ==
                  weight_hierarchy_serial(c));
    }
}

TEST_CASE("parallel map keeps index order and rethrows")
{
    const auto f3 = Field::get(3);
    const SubspaceEnumerator e(span(MatrixFq::identity(f3, 4)), 2);
    const auto pred = [](const Subspace& s) { return s.pivots()[0] == 0; };
    const auto serial = kernels::map_subspaces_serial(e, pred);
    for (int threads : {1, 2, 4})
        CHECK(kernels::map_subspaces(e, pred, threads) == serial);

    CHECK_THROWS_AS(kernels::map_subspaces(
                        e,
                        [](const Subspace& s) -> bool {
                            if (s.pivots()[1] == 3)
                                throw std::runtime_error("boom");
                            return true;
                        },
                        4),
                    std::runtime_error);
}

TEST_CASE("parallel census equals the serial census")
{
    for (const auto& p : {Poset::weak_order({2, 3}), Poset::from_cover_relations(5, {{1, 4}, {2, 4}, {3, 5}})})
        for (int threads : {1, 2, 4}) {
            const auto par = census(p, 2, 3, SearchOptions{default_enumeration_budget, threads});
            const auto ser = census_serial(p, 2, 3);
            CHECK(par.total_codes == ser.total_codes);
            CHECK(par.chain_condition_codes == ser.chain_condition_codes);
        }
}
