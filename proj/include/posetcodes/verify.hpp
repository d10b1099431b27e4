#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "posetcodes/codes.hpp"
#include "posetcodes/poset.hpp"

// Property suite behind `pcodes verify`: checks the structural facts about
// weight hierarchies and flags on one instance, plus seeded random instance
// generators.
namespace posetcodes::verify {

struct Instance {
    Poset poset;
    nlohmann::ordered_json poset_json;  // reproduces `poset` through io::parse_poset
    Subspace code;
    std::optional<std::pair<std::size_t, std::size_t>> rt_shape;  // (chain length, chain count)
    std::optional<std::vector<std::size_t>> expected_hierarchy;
};

struct Failure {
    std::string property;
    std::string detail;
};

struct Report {
    std::vector<std::string> checked;
    std::vector<Failure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Properties checked, by name:
///   hierarchy_bounds     1 <= d_1 < ... < d_k <= n and r <= d_r <= n-k+r
///   kernel_agreement     parallel and serial hierarchy coincide
///   expected_hierarchy   matches Instance::expected_hierarchy (if given)
///   scalar_invariance    w_P(a x) = w_P(x) for basis rows and a != 0
///   ideal_union          ||D|| from basis supports = union of codeword ideals
///   antichain_reduction  antichain hierarchy = Wei hierarchy by brute force
///   flag_validity        any flag found is nested and attains the hierarchy
///   total_order_flag     totally ordered support: flag exists, greedy = search, unique
///   rt_equivalence       disjoint chains: rt_weight = w_P on column-major reading
/// Brute-force checks are skipped when they would visit more than 4096
/// codewords.
Report verify_instance(const Instance& inst, const SearchOptions& opts = {});

using Rng = std::mt19937_64;

/// Random poset (chain, antichain, weak order or random covers) with n <=
/// max_n and a random code of dimension <= min(4, n) over GF(q).
Instance random_instance(Rng& rng, std::uint32_t q, std::size_t max_n);

/// Random poset as above and a code whose generators are supported on a
/// random maximal chain of it, so the code support is totally ordered.
Instance random_total_support_instance(Rng& rng, std::uint32_t q, std::size_t max_n);

/// Random maximal chain, bottom to top.
std::vector<int> random_maximal_chain(Rng& rng, const Poset& p);

/// Integer in [lo, hi] from the raw generator output, so sequences depend only
/// on the seed.
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

} // namespace posetcodes::verify
