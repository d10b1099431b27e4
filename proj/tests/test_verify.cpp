#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "posetcodes/io.hpp"
#include "posetcodes/verify.hpp"

using namespace posetcodes;

namespace {

bool checked(const verify::Report& r, const std::string& name)
{
    return std::find(r.checked.begin(), r.checked.end(), name) != r.checked.end();
}

} // namespace

TEST_CASE("the weak-order example passes every property")
{
    verify::Instance inst{fixtures::weak_3x9(), nlohmann::ordered_json{{"weak_order", std::vector<int>(9, 3)}},
                          fixtures::example_code(), std::nullopt, std::vector<std::size_t>{7, 19, 25}};
    const auto r = verify::verify_instance(inst);
    CHECK(r.ok());
    CHECK(checked(r, "expected_hierarchy"));
    CHECK(checked(r, "total_order_flag"));
}

TEST_CASE("a wrong expected hierarchy is reported")
{
    verify::Instance inst{fixtures::weak_3x9(), nlohmann::ordered_json{{"weak_order", std::vector<int>(9, 3)}},
                          fixtures::example_code(), std::nullopt, std::vector<std::size_t>{7, 19, 26}};
    const auto r = verify::verify_instance(inst);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].property == "expected_hierarchy");
}

TEST_CASE("random instances are reproducible and round-trip their poset json")
{
    verify::Rng a(99), b(99);
    for (int i = 0; i < 50; ++i) {
        const auto x = verify::random_instance(a, 2, 8);
        const auto y = verify::random_instance(b, 2, 8);
        CHECK(x.code == y.code);
        CHECK(x.poset == y.poset);
        CHECK(io::parse_poset(x.poset_json).poset == x.poset);
        CHECK(x.code.dim() <= 4);
    }
}

TEST_CASE("random maximal chains are maximal")
{
    verify::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto inst = verify::random_instance(rng, 2, 10);
        const auto& p = inst.poset;
        const auto chain = verify::random_maximal_chain(rng, p);
        REQUIRE_FALSE(chain.empty());
        for (std::size_t j = 0; j + 1 < chain.size(); ++j)
            CHECK(p.less(chain[j], chain[j + 1]));
        // Nothing can be inserted below, between or above.
        for (int x = 1; x <= static_cast<int>(p.size()); ++x) {
            if (std::find(chain.begin(), chain.end(), x) != chain.end())
                continue;
            bool fits = true;
            for (int c : chain)
                fits = fits && p.comparable(x, c);
            CHECK_FALSE(fits);
        }
    }
}

TEST_CASE("property: random instances pass the suite")
{
    verify::Rng rng(2024);
    for (int i = 0; i < 150; ++i) {
        const std::uint32_t q = i % 3 == 2 ? 3 : 2;
        const auto inst = i % 2 ? verify::random_total_support_instance(rng, q, 8) : verify::random_instance(rng, q, 8);
        const auto r = verify::verify_instance(inst);
        CAPTURE(i);
        CHECK(r.ok());
        if (!r.ok())
            MESSAGE(r.failures[0].property << ": " << r.failures[0].detail);
    }
}
